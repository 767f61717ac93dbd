#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat.hpp"

namespace eckardt {

/// Elementary symmetric polynomial of degree k in num_vars variables (k in 1..num_vars).
MultiPoly elem_sym(std::size_t k, std::size_t num_vars = 5);

/// (sigma_1, ..., sigma_5) of five values, computed from the polynomials above.
std::array<Rat, 5> elem_sym_values(std::span<const Rat, 5> values);

}  // namespace eckardt
