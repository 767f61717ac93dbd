#include "eckardt/arith/rat_matrix.hpp"

#include "eckardt/errors.hpp"

namespace eckardt {

RatMatrix rref(RatMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][c].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot_row]);
    const Rat inv = rows[pivot_row][c].inverse();
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == pivot_row || rows[k][c].is_zero()) continue;
      const Rat f = rows[k][c];
      for (std::size_t j = 0; j < cols; ++j) rows[k][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const RatMatrix& rows) { return rref(rows).size(); }

RatMatrix null_space(const RatMatrix& rows, std::size_t num_cols) {
  const RatMatrix r = rref(rows);
  std::vector<long> pivot_of_col(num_cols, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (!r[i][c].is_zero()) {
        pivot_of_col[c] = static_cast<long>(i);
        break;
      }
    }
  }
  RatMatrix basis;
  for (std::size_t free = 0; free < num_cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Rat> v(num_cols, Rat(0));
    v[free] = Rat(1);
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -r[static_cast<std::size_t>(pivot_of_col[c])][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool row_space_contains(const RatMatrix& outer, const RatMatrix& inner) {
  RatMatrix stacked = outer;
  stacked.insert(stacked.end(), inner.begin(), inner.end());
  return rank(stacked) == rank(outer);
}

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw InvalidInput("vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace eckardt
