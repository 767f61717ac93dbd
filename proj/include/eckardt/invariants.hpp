#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "eckardt/arith/factored_poly.hpp"
#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat.hpp"
#include "eckardt/permutation.hpp"

namespace eckardt {

/// Projective coefficient vector (a0:...:a4) of the cubic
/// sum a_i z_i^3 = 0 on the hyperplane sum z_i = 0 in P^4.
class SylvesterPoint {
 public:
  /// Throws InvalidInput when every coordinate is zero.
  explicit SylvesterPoint(std::array<Rat, 5> coeffs);
  /// Comma-separated rationals, e.g. "1,2,-3/4,4,5".
  static SylvesterPoint parse(std::string_view csv);

  const std::array<Rat, 5>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t zero_count() const;
  bool is_nondegenerate() const { return zero_count() == 0; }

  SylvesterPoint scaled(const Rat& lambda) const;
  SylvesterPoint permuted(const Permutation& pi) const;
  std::string to_string() const;

  /// Projective equality: coordinates proportional.
  friend bool operator==(const SylvesterPoint& a, const SylvesterPoint& b);

 private:
  std::array<Rat, 5> coeffs_;
};

inline constexpr std::array<unsigned, 5> kModuliWeights{1, 2, 3, 4, 5};

/// Point of the weighted projective space P(1,2,3,4,5). Used both for the
/// invariant tuple (I8:I16:I24:I32:I40) and for sigma-coordinates (s1:...:s5).
/// Raw values are stored; there is no canonical representative.
class ModuliPoint {
 public:
  /// Throws InvalidInput when every coordinate is zero.
  explicit ModuliPoint(std::array<Rat, 5> coords);

  const std::array<Rat, 5>& coords() const { return coords_; }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;

 private:
  std::array<Rat, 5> coords_;
};

/// Q = (1:0:0:0:0), image of the degenerate Sylvester forms.
ModuliPoint q_point();

/// True iff p and q differ by (x_i) -> (lambda^{w_i} x_i) for some nonzero complex lambda.
bool weighted_equal(const ModuliPoint& p, const ModuliPoint& q);
inline bool is_q(const ModuliPoint& p) { return weighted_equal(p, q_point()); }

/// (s1, ..., s5) evaluated at the coefficients.
std::array<Rat, 5> sigma_values(const SylvesterPoint& s);
/// The sigma vector as a weighted point; never all zero for a valid s.
ModuliPoint sigma_point(const SylvesterPoint& s);

/// (s4^2 - 4 s3 s5, s1 s5^3, s4 s5^4, s2 s5^6, s5^8), possibly all zero.
std::array<Rat, 5> salmon_values(const SylvesterPoint& s);
/// As salmon_values, but throws BaseLocusPoint when all five vanish.
ModuliPoint salmon_invariants(const SylvesterPoint& s);

/// s5^18 * prod_{i<j} (a_j - a_i), kept factored in a0..a4.
const FactoredPoly& i100_polynomial();
Rat i100(const SylvesterPoint& s);

/// Denominator-free inverse (I16 : I32 : (I24^2 - I8 I40)/4 : I24 I40 : I40^2).
/// Throws InverseUndefined when I40 = 0.
ModuliPoint inverse_map(const ModuliPoint& invariants);

/// s4 = s5 = 0, the base locus of the invariant map.
bool base_locus_forward(const SylvesterPoint& s);

/// Limit as t -> 0 of the invariant point of a one-parameter family of Sylvester
/// coefficients given as polynomials in a single variable t. Works through the
/// base locus by comparing t-adic valuations against the weights.
/// Throws BaseLocusPoint when the whole family lies in the base locus.
ModuliPoint moduli_limit(std::span<const MultiPoly, 5> family);

}  // namespace eckardt
