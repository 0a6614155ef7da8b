#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace dagalign {

// Dense row-major matrix of non-negative weights.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  WeightMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct BipartiteMatching {
  double value = 0.0;
  // (row, col) pairs with positive weight, ascending by row.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Maximum-weight (not necessarily perfect) bipartite matching via the
// O(max(p,q)^3) Hungarian method on the zero-padded square matrix.
// Throws Error{kNegativeWeight} if any entry is negative.
BipartiteMatching hungarian_max(const WeightMatrix& weights);

}  // namespace dagalign
