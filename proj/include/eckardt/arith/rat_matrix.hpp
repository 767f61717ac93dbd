#pragma once

#include <cstddef>
#include <vector>

#include "eckardt/arith/rat.hpp"

namespace eckardt {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Reduced row echelon form with zero rows dropped; the canonical basis of the row space.
RatMatrix rref(RatMatrix rows);
std::size_t rank(const RatMatrix& rows);
/// Basis of {x : rows * x = 0}, one basis vector per free column.
RatMatrix null_space(const RatMatrix& rows, std::size_t num_cols);
/// True iff each row of inner lies in the row space of outer.
bool row_space_contains(const RatMatrix& outer, const RatMatrix& inner);
/// True iff the two nonzero vectors are proportional.
bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace eckardt
