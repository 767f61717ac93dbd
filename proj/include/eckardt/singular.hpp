#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eckardt/arith/factored_poly.hpp"
#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat_matrix.hpp"
#include "eckardt/invariants.hpp"
#include "eckardt/pentahedron.hpp"

namespace eckardt {

enum class ComponentKind { Hyperplane, PairPair, Triple };
std::string to_string(ComponentKind kind);

/// Linear subspace of P^4 in the singular locus of E = V(I100):
///   Hyperplane(i)      V(a_i)
///   PairPair(i,j,k,l)  V(a_i - a_j, a_k - a_l), {i,j} and {k,l} disjoint
///   Triple(i,j,k)      V(a_i - a_j, a_k - a_j)
/// Indices are normalized: i<j, k<l, i<k for PairPair and i<j<k for Triple.
class LinearComponent {
 public:
  static LinearComponent hyperplane(unsigned i);
  static LinearComponent pair_pair(unsigned i, unsigned j, unsigned k, unsigned l);
  static LinearComponent triple(unsigned i, unsigned j, unsigned k);

  ComponentKind kind() const { return kind_; }
  const std::vector<std::uint8_t>& indices() const { return indices_; }
  std::string name() const;

  /// Defining linear forms as rows over a0..a4.
  RatMatrix equations() const;
  /// 5 x param_count matrix M with a = M t. Hyperplane: t fills the other four
  /// coordinates in order. PairPair: (t0, t1, t2) -> the free index, {i,j}, {k,l}.
  /// Triple: (t0, t1, t2) -> the smaller free index, {i,j,k}, the larger free index.
  RatMatrix parametrization() const;
  std::size_t param_count() const { return kind_ == ComponentKind::Hyperplane ? 4 : 3; }
  /// a_i -> sum_k M_ik t_k as polynomials in the parameters.
  std::vector<MultiPoly> substitution() const;
  SylvesterPoint point_at(std::span<const Rat> params) const;
  /// The image of point_at(params) in normal form: (a,b,b,c,c), (a,b,b,b,c) or (0,t...).
  SylvesterPoint normal_form_at(std::span<const Rat> params) const;

  /// Component obtained by relabelling the coordinates with pi.
  LinearComponent permuted(const Permutation& pi) const;

  friend bool operator==(const LinearComponent&, const LinearComponent&) = default;
  friend auto operator<=>(const LinearComponent&, const LinearComponent&) = default;

 private:
  LinearComponent(ComponentKind kind, std::vector<std::uint8_t> indices) : kind_(kind), indices_(std::move(indices)) {}

  ComponentKind kind_;
  std::vector<std::uint8_t> indices_;
};

/// The 15 index 4-tuples and 10 triples in their customary listing order (not normalized).
const std::vector<std::array<unsigned, 4>>& listed_pair_pairs();
const std::vector<std::array<unsigned, 3>>& listed_triples();

/// All 30 components (5 + 15 + 10), generated combinatorially and checked
/// against the normalized customary lists; throws std::logic_error on mismatch.
std::vector<LinearComponent> claimed_components();

/// The five partial derivatives of I100 as factored sums.
const std::array<FactoredSum, 5>& i100_partials();

struct ComponentVerification {
  bool i100_vanishes = false;
  std::array<bool, 5> partials_vanish{};
  bool all() const;
};

/// Substitutes a linear (or affine) parametrization into I100 and its partials
/// and tests each for identical vanishing.
ComponentVerification verify_substitution(std::span<const MultiPoly> substitution);
ComponentVerification verify_component(const LinearComponent& c);
bool verify_component_in_singular_locus(const LinearComponent& c);

struct OracleResult {
  std::vector<LinearComponent> components;  // sorted
  std::size_t linear_factors = 0;           // distinct linear forms in the factorization
  std::size_t raw_difference_pairs = 0;     // pairs of distinct difference hyperplanes
  std::size_t distinct_difference_planes = 0;
  std::size_t candidates = 0;               // distinct candidate subspaces before pruning
  std::size_t pruned = 0;
};

/// Singular locus of I100 read off its factorization alone: for a product of
/// powers of distinct linear forms, the singular set is the union of V(l) for
/// exponents >= 2 and of all pairwise intersections V(l, l'). Candidates
/// contained in a larger candidate are pruned.
OracleResult arrangement_oracle();

struct SmoothnessReport {
  std::size_t samples = 0;
  std::size_t hyperplane_failures = 0;  // points on one difference hyperplane with all partials zero
  std::size_t off_e_failures = 0;       // generic points with I100 = 0
  std::size_t redraws = 0;
  std::vector<SylvesterPoint> hyperplane_points;
  std::vector<SylvesterPoint> generic_points;
  bool ok() const { return hyperplane_failures == 0 && off_e_failures == 0; }
};

/// Seeded sampling of points on exactly one difference hyperplane (with s5 != 0),
/// which must be smooth points of E, and of points off E.
SmoothnessReport smoothness_off_components(std::size_t n, std::uint64_t seed);

struct MultiplicityReport {
  SylvesterPoint point;
  std::size_t zero_coordinates = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> vanishing_differences{};  // (i, j), a_i = a_j
  int multiplicity = 0;
  std::optional<bool> ordinary{};  // undefined with a zero coordinate
  std::vector<std::optional<int>> direction_orders{};
  std::optional<int> taylor_order{};  // nullopt: vanishes through the truncation order
  bool directions_agree = false;
};

/// Lowest nonvanishing order in eps of s5^18 * det Vandermonde evaluated at p + eps v,
/// computed with truncated power series and the Leibniz determinant expansion.
std::optional<int> taylor_order_along(const SylvesterPoint& p, const std::array<Rat, 5>& direction,
                                      unsigned truncation = 8);

/// Factor-count multiplicity 18 #{a_i = 0} + #{i<j : a_i = a_j}, plus the Taylor
/// oracle along three seeded random directions. Throws NotOnHypersurface.
MultiplicityReport multiplicity_at(const SylvesterPoint& p, std::uint64_t seed = 1, unsigned truncation = 8);

/// Hyperplane -> Degenerate (image Q), PairPair -> S1, Triple -> S2.
FamilyTag image_family(const LinearComponent& c);
/// Samples parameters and checks the invariants of each sample equal those of its
/// normal form (and are Q for hyperplanes).
bool verify_image_family(const LinearComponent& c, std::size_t samples, std::uint64_t seed);

struct ComponentIntersection {
  LinearComponent pair_pair;
  LinearComponent triple;
  std::size_t projective_dimension = 0;
  FamilyTag sample_family = FamilyTag::Generic;
};

/// Every PairPair x Triple intersection with the family of a seeded generic point on it.
std::vector<ComponentIntersection> pair_pair_triple_intersections(std::uint64_t seed);

}  // namespace eckardt
