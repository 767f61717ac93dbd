#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eckardt/arith/rat.hpp"

namespace eckardt {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t degree_of(const Exponents& e);

/// Graded lexicographic order: total degree first, then lex with x0 > x1 > ...
struct GrLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vectors in graded-lex order;
/// zero coefficients are never stored, so equality is map equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GrLexLess>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rat& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(Exponents exponents, const Rat& c);
  /// sum_i coeffs[i] * x_i + constant_term
  static MultiPoly linear(std::span<const Rat> coeffs, const Rat& constant_term = Rat(0));

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  Rat coefficient(const Exponents& exponents) const;
  Rat constant_term() const;
  /// Coefficient of the grlex-largest term. Zero polynomial -> 0.
  Rat leading_coefficient() const;

  /// Adds c * x^exponents, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rat(-1); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned exponent) const;
  MultiPoly derive(std::size_t var) const;
  /// Composition x_i -> images[i]; every image must share one variable count.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  Rat eval(std::span<const Rat> point) const;

  /// Human-readable form, leading term first; names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

}  // namespace eckardt
