#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat.hpp"

namespace eckardt {

class FactoredSum;

struct Factor {
  MultiPoly base;
  unsigned exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// scalar * prod base_k^exponent_k, never multiplied out.
///
/// Construction normalizes the factor list: constant bases are folded into the
/// scalar, each base is scaled to leading coefficient 1 (grlex), and equal bases
/// are merged. A zero base makes the whole product zero (scalar 0, no factors).
class FactoredPoly {
 public:
  explicit FactoredPoly(std::size_t num_vars = 0) : num_vars_(num_vars), scalar_(0) {}
  FactoredPoly(std::size_t num_vars, const Rat& scalar, std::vector<Factor> factors);
  static FactoredPoly from_poly(const MultiPoly& p);

  std::size_t num_vars() const { return num_vars_; }
  const Rat& scalar() const { return scalar_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return scalar_.is_zero(); }
  /// sum exponent * deg(base); -1 for zero.
  int total_degree() const;

  Rat eval(std::span<const Rat> point) const;
  /// Substitutes base by base; the result has images' variable count.
  FactoredPoly substitute(std::span<const MultiPoly> images) const;
  /// Product rule: one summand per factor whose base depends on var.
  FactoredSum derive(std::size_t var) const;

  /// Multiplies everything out. Refuses products above max_degree.
  MultiPoly expand(int max_degree) const;

  friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b);
  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;

  /// Number of expand() calls made process-wide; lets tests prove a code path never expands.
  static std::size_t expansion_count();

 private:
  void normalize();

  std::size_t num_vars_;
  Rat scalar_;
  std::vector<Factor> factors_;
};

/// Formal sum of FactoredPoly terms, as produced by FactoredPoly::derive.
class FactoredSum {
 public:
  explicit FactoredSum(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  FactoredSum(std::size_t num_vars, std::vector<FactoredPoly> summands);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<FactoredPoly>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }

  Rat eval(std::span<const Rat> point) const;
  FactoredSum substitute(std::span<const MultiPoly> images) const;

  /// Exact identity test. Vanishing summands are dropped, the factors common to
  /// all remaining summands are divided out, and only the cofactors are expanded.
  bool is_identically_zero(int max_cofactor_degree = 64) const;

  MultiPoly expand(int max_degree) const;

 private:
  std::size_t num_vars_;
  std::vector<FactoredPoly> summands_;
};

}  // namespace eckardt
