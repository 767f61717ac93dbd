#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat.hpp"
#include "eckardt/invariants.hpp"
#include "eckardt/permutation.hpp"
#include "eckardt/rng.hpp"

namespace eckardt {

using P3Point = std::array<Rat, 4>;
using P4Point = std::array<Rat, 5>;

/// Homogeneous cubic in x0..x3; coefficients in graded-lex order (x0^3, x0^2 x1, ..., x3^3).
class CubicForm3 {
 public:
  static constexpr std::size_t kNumMonomials = 20;
  using Monomial = std::array<std::uint32_t, 4>;

  /// Throws InvalidInput when identically zero.
  explicit CubicForm3(std::array<Rat, kNumMonomials> coeffs);
  /// p must be a nonzero homogeneous cubic in 4 variables.
  static CubicForm3 from_poly(const MultiPoly& p);

  static const std::array<Monomial, kNumMonomials>& monomials();
  static std::size_t index_of(const Monomial& m);

  const std::array<Rat, kNumMonomials>& coeffs() const { return coeffs_; }
  const Rat& coefficient(const Monomial& m) const { return coeffs_[index_of(m)]; }
  MultiPoly to_poly() const;
  Rat eval(const P3Point& x) const;

  friend bool operator==(const CubicForm3&, const CubicForm3&) = default;

 private:
  std::array<Rat, kNumMonomials> coeffs_;
};

/// Eliminates z4 = -(x0+x1+x2+x3): sum_{i<=3} a_i x_i^3 - a4 (x0+x1+x2+x3)^3.
CubicForm3 to_cubic_p3(const SylvesterPoint& s);

/// Vertex A_ij of the Sylvester pentahedron: z_i = 1, z_j = -1, other z zero.
/// It lies on the three faces pi_k, k not in {i, j}.
struct PentVertex {
  std::uint8_t i = 0;
  std::uint8_t j = 1;

  PentVertex() = default;
  /// Stores the pair sorted; throws InvalidInput for i == j or an index > 4.
  PentVertex(unsigned a, unsigned b);

  P4Point z() const;
  /// Image in P^3 under x_k = z_k (k <= 3).
  P3Point p3() const;
  bool on_face(unsigned k) const { return k != i && k != j; }
  std::string name() const;

  friend bool operator==(const PentVertex&, const PentVertex&) = default;
  friend auto operator<=>(const PentVertex&, const PentVertex&) = default;
};

/// { A_ij : a_i = a_j }. Throws DegenerateForm if some a_i = 0.
std::vector<PentVertex> eckardt_vertices(const SylvesterPoint& s);

enum class FamilyTag { Generic, E1, S1, S2, C1, C2, Clebsch, Degenerate };
std::string to_string(FamilyTag tag);

/// Degenerate if some a_i = 0; otherwise by the multiplicities of equal
/// coefficient values: 1+1+1+1+1 Generic, 2+1+1+1 E1 (a smooth point of E), 2+2+1 S1, 3+1+1 S2, 3+2 C1, 4+1 C2, 5 Clebsch.
FamilyTag classify_family(const SylvesterPoint& s);

/// Expected exact Eckardt count of a nondegenerate family; -1 for Degenerate.
int eckardt_count(FamilyTag tag);

/// Seeded representative of a family: distinct nonzero block values in -12..12,
/// optionally shuffled by a random permutation. Degenerate puts one zero
/// among four distinct nonzero values.
SylvesterPoint sample_family_point(FamilyTag tag, SeededRng& rng, bool shuffle = true);
/// Redraws until is_smooth holds.
SylvesterPoint sample_smooth_family_point(FamilyTag tag, SeededRng& rng, bool shuffle = true);

/// Smoothness of the cubic surface: at most one zero coefficient, and no sign
/// choice with sum e_i / sqrt(a_i) = 0. The sign test is done in double precision.
bool is_smooth(const SylvesterPoint& s);

/// Subgroup of S5 given by its elements; closure is checked on construction.
class PermSubgroup {
 public:
  /// Throws InvalidInput if the set misses the identity or is not closed.
  explicit PermSubgroup(std::vector<Permutation> elements);

  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool is_abelian() const;
  /// element order -> number of elements of that order
  std::map<int, int> order_histogram() const;
  bool contains(const Permutation& p) const;

 private:
  std::vector<Permutation> elements_;
};

/// All pi in S5 with pi . coeffs proportional to coeffs.
PermSubgroup stabilizer(const SylvesterPoint& s);

/// Exact test that f vanishes on the line through p and q. Throws InvalidInput
/// when p and q are proportional.
bool contains_line(const CubicForm3& f, const P3Point& p, const P3Point& q);
/// Same test for sum a_i z_i^3 on sum z = 0; both points must lie on sum z = 0.
bool contains_line(const SylvesterPoint& s, const P4Point& p, const P4Point& q);

/// Rank-2 test on the coordinate matrix. Needs >= 3 pairwise distinct points
/// of one dimension; throws InvalidInput otherwise.
bool collinear(const std::vector<std::vector<Rat>>& points);

}  // namespace eckardt
