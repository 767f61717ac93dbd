#include "eckardt/arith/symmetric.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "eckardt/errors.hpp"

namespace eckardt {

MultiPoly elem_sym(std::size_t k, std::size_t num_vars) {
  if (num_vars == 0 || k < 1 || k > num_vars) {
    throw InvalidInput("elementary symmetric degree " + std::to_string(k) + " out of range 1.." +
                       std::to_string(num_vars));
  }
  MultiPoly out(num_vars);
  // Walk all 0/1 exponent vectors with exactly k ones.
  std::vector<bool> mask(num_vars, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Exponents e(num_vars, 0);
    for (std::size_t i = 0; i < num_vars; ++i) e[i] = mask[i] ? 1 : 0;
    out.add_term(e, Rat(1));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::array<Rat, 5> elem_sym_values(std::span<const Rat, 5> values) {
  static const std::array<MultiPoly, 5> sigmas = [] {
    std::array<MultiPoly, 5> s;
    for (std::size_t k = 1; k <= 5; ++k) s[k - 1] = elem_sym(k, 5);
    return s;
  }();
  std::array<Rat, 5> out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = sigmas[k].eval(values);
  return out;
}

}  // namespace eckardt
