#include "dagalign/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dagalign/error.hpp"

namespace dagalign {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

std::uint64_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) schema_error(where + ": expected a non-negative integer");
  auto x = v.get<std::uint64_t>();
  if (x > 0xFFFFFFFFull) schema_error(where + ": index too large");
  return x;
}

DagGraph parse_graph(const json& doc, const char* name) {
  if (!doc.contains(name) || !doc[name].is_object()) {
    schema_error(std::string("missing object \"") + name + "\"");
  }
  const json& g = doc[name];
  if (!g.contains("n")) schema_error(std::string(name) + ".n missing");
  const std::size_t n = as_index(g["n"], std::string(name) + ".n");
  std::vector<DagEdge> edges;
  if (g.contains("edges")) {
    if (!g["edges"].is_array()) schema_error(std::string(name) + ".edges: expected array");
    for (const json& e : g["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        schema_error(std::string(name) + ".edges: expected [u, v] pairs");
      }
      edges.push_back({static_cast<VertexId>(as_index(e[0], name)),
                       static_cast<VertexId>(as_index(e[1], name))});
    }
  }
  return DagGraph(n, std::move(edges));
}

std::vector<std::string> parse_labels(const json& doc, const char* name) {
  std::vector<std::string> out;
  if (!doc.contains(name)) return out;
  if (!doc[name].is_array()) schema_error(std::string(name) + ": expected array of strings");
  for (const json& s : doc[name]) {
    if (!s.is_string()) schema_error(std::string(name) + ": expected array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_graph(std::ostringstream& os, const DagGraph& g) {
  os << "{\"n\": " << g.vertex_count() << ", \"edges\": [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) os << ", ";
    os << '[' << g.edges()[i].from << ", " << g.edges()[i].to << ']';
  }
  os << "]}";
}

void write_labels(std::ostringstream& os, const char* name,
                  const std::vector<std::string>& labels) {
  if (labels.empty()) return;
  os << ", \"" << name << "\": [";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ", ";
    os << json(labels[i]).dump();
  }
  os << ']';
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
}

}  // namespace

AlignmentInstance parse_instance(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object()) schema_error("instance must be a JSON object");
  DagGraph g1 = parse_graph(doc, "g1");
  DagGraph g2 = parse_graph(doc, "g2");
  std::vector<CandidateEdge> beta;
  if (!doc.contains("beta") || !doc["beta"].is_array()) schema_error("missing array \"beta\"");
  for (const json& e : doc["beta"]) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number()) {
      schema_error("beta: expected [i, j, w] triples");
    }
    beta.push_back({static_cast<VertexId>(as_index(e[0], "beta")),
                    static_cast<VertexId>(as_index(e[1], "beta")), e[2].get<double>()});
  }
  return AlignmentInstance(std::move(g1), std::move(g2), std::move(beta),
                           parse_labels(doc, "labels1"), parse_labels(doc, "labels2"));
}

std::string serialize_instance(const AlignmentInstance& instance) {
  std::ostringstream os;
  os << "{\"g1\": ";
  write_graph(os, instance.g1());
  os << ", \"g2\": ";
  write_graph(os, instance.g2());
  os << ", \"beta\": [";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const CandidateEdge& e = instance.edge(i);
    if (i) os << ", ";
    os << '[' << e.left << ", " << e.right << ", " << shortest(e.weight) << ']';
  }
  os << ']';
  write_labels(os, "labels1", instance.labels1());
  write_labels(os, "labels2", instance.labels2());
  os << "}\n";
  return os.str();
}

std::string format_weight(double weight) {
  if (!std::isfinite(weight)) return weight > 0 ? "\"inf\"" : "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", weight);
  std::string s(buf);
  if (s == "-0.000000000") s = "0.000000000";
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

std::string alignment_to_json(const AlignmentInstance& instance, const Alignment& alignment,
                              std::optional<double> ratio) {
  std::ostringstream os;
  os << "{\"chosen\": [";
  for (std::size_t k = 0; k < alignment.chosen.size(); ++k) {
    const CandidateEdge& e = instance.edge(alignment.chosen[k]);
    if (k) os << ", ";
    os << '[' << e.left << ", " << e.right << ", " << format_weight(e.weight) << ']';
  }
  os << "], \"weight\": " << format_weight(alignment.total_weight) << ", \"valid\": true";
  if (ratio) os << ", \"ratio\": " << format_weight(*ratio);
  os << "}\n";
  return os.str();
}

std::vector<EdgeIndex> parse_alignment(const AlignmentInstance& instance, std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("chosen") || !doc["chosen"].is_array()) {
    schema_error("alignment must be an object with a \"chosen\" array");
  }
  std::vector<EdgeIndex> out;
  for (const json& e : doc["chosen"]) {
    if (!e.is_array() || e.size() < 2) schema_error("chosen: expected [i, j, w] triples");
    auto l = static_cast<VertexId>(as_index(e[0], "chosen"));
    auto r = static_cast<VertexId>(as_index(e[1], "chosen"));
    auto idx = instance.find(l, r);
    if (!idx) {
      schema_error("chosen pair (" + std::to_string(l) + "," + std::to_string(r) +
                   ") is not a candidate edge");
    }
    out.push_back(*idx);
  }
  return out;
}

std::string report_to_json(const ValidationReport& report) {
  std::ostringstream os;
  os << "{\"valid\": " << (report.valid ? "true" : "false")
     << ", \"duplicate_vertex_violations\": [";
  for (std::size_t k = 0; k < report.duplicate_vertex_violations.size(); ++k) {
    if (k) os << ", ";
    os << '[' << report.duplicate_vertex_violations[k].first << ", "
       << report.duplicate_vertex_violations[k].second << ']';
  }
  os << "], \"conflict_violations\": [";
  for (std::size_t k = 0; k < report.conflict_violations.size(); ++k) {
    const ConflictViolation& v = report.conflict_violations[k];
    if (k) os << ", ";
    os << '[' << v.first << ", " << v.second << ", " << static_cast<int>(v.condition) << ']';
  }
  os << "], \"weight\": " << format_weight(report.recomputed_weight) << "}\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path.string());
  out << text;
}

}  // namespace dagalign
