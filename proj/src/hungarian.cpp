#include "dagalign/hungarian.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dagalign/error.hpp"

namespace dagalign {

WeightMatrix::WeightMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kParseError, "ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

BipartiteMatching hungarian_max(const WeightMatrix& weights) {
  const std::size_t p = weights.rows();
  const std::size_t q = weights.cols();
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      if (!(weights(r, c) >= 0.0)) {
        throw Error(ErrorCode::kNegativeWeight,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  BipartiteMatching out;
  const std::size_t n = std::max(p, q);
  if (n == 0) return out;

  // Minimum-cost assignment on cost = -weight; padding cells cost 0.
  auto cost = [&](std::size_t r, std::size_t c) {
    return (r < p && c < q) ? -weights(r, c) : 0.0;
  };
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Potentials and matching are 1-based; index 0 is the virtual start column.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t row0 = match_col[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double cur = cost(row0 - 1, col - 1) - u[row0] - v[col];
        if (cur < minv[col]) {
          minv[col] = cur;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match_col[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match_col[col0] = match_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  for (std::size_t col = 1; col <= n; ++col) {
    const std::size_t r = match_col[col] - 1;
    const std::size_t c = col - 1;
    if (r < p && c < q && weights(r, c) > 0.0) out.pairs.emplace_back(r, c);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  for (const auto& [r, c] : out.pairs) out.value += weights(r, c);
  return out;
}

}  // namespace dagalign
