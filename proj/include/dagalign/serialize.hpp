#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dagalign/alignment.hpp"
#include "dagalign/instance.hpp"

namespace dagalign {

// Instance files are single-line JSON in canonical field order:
//   {"g1": {"n": N, "edges": [[u, v], ...]}, "g2": {...}, "beta": [[i, j, w], ...],
//    "labels1": [...], "labels2": [...]}
// with the label arrays omitted when empty. β weights are written in the
// shortest form that parses back to the same double, so
// serialize(parse(serialize(x))) is byte-identical to serialize(x).
//
// parse_instance throws Error with kParseError (malformed JSON or schema),
// kCyclicGraph, kIndexOutOfRange, kWeightOutOfRange or kDuplicatePair.
AlignmentInstance parse_instance(std::string_view text);
std::string serialize_instance(const AlignmentInstance& instance);

// Fixed notation with at most 9 fractional digits, trailing zeros trimmed
// down to one ("1.0", "0.25", "0.333333333").
std::string format_weight(double weight);

// {"chosen": [[i, j, w], ...], "weight": W, "valid": true[, "ratio": R]}
std::string alignment_to_json(const AlignmentInstance& instance, const Alignment& alignment,
                              std::optional<double> ratio = std::nullopt);

// Reads the "chosen" pairs of an alignment document and maps each (i, j) to
// its β index. The w column is informational and ignored. Throws
// Error{kParseError} for pairs absent from β.
std::vector<EdgeIndex> parse_alignment(const AlignmentInstance& instance, std::string_view text);

std::string report_to_json(const ValidationReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace dagalign
