#include "eckardt/singular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eckardt/errors.hpp"
#include "eckardt/rng.hpp"

namespace eckardt {

namespace {

std::vector<Rat> unit(std::size_t i) {
  std::vector<Rat> v(5, Rat(0));
  v[i] = Rat(1);
  return v;
}

std::vector<Rat> difference(std::size_t i, std::size_t j) {
  std::vector<Rat> v(5, Rat(0));
  v[i] = Rat(1);
  v[j] = Rat(-1);
  return v;
}

// Power series in eps truncated after eps^order.
class Series {
 public:
  Series() : Series(0) {}
  explicit Series(unsigned order, Rat c0 = Rat(0), Rat c1 = Rat(0)) : c_(order + 1, Rat(0)) {
    c_[0] = std::move(c0);
    if (order >= 1) c_[1] = std::move(c1);
  }
  Series& operator+=(const Series& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(static_cast<unsigned>(a.c_.size() - 1));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  Series scaled(int s) const {
    Series out = *this;
    for (auto& x : out.c_) x *= Rat(s);
    return out;
  }
  std::optional<int> order() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!c_[k].is_zero()) return static_cast<int>(k);
    }
    return std::nullopt;
  }

 private:
  std::vector<Rat> c_;
};

Rat random_nonzero(SeededRng& rng, long bound) {
  long v = 0;
  while (v == 0) v = rng.uniform_int(-bound, bound);
  return Rat(v);
}

Rat random_rational(SeededRng& rng) {
  return Rat(rng.uniform_int(-30, 30), rng.uniform_int(1, 7));
}

std::size_t equal_pairs(const SylvesterPoint& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) n += p[i] == p[j] ? 1 : 0;
  }
  return n;
}

// Classifies a codimension-1 or -2 subspace spanned by coordinate equalities.
std::optional<LinearComponent> recognize(const RatMatrix& eqs) {
  if (eqs.size() == 1) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (proportional(eqs[0], unit(i))) return LinearComponent::hyperplane(static_cast<unsigned>(i));
    }
    return std::nullopt;
  }
  if (eqs.size() != 2) return std::nullopt;
  for (std::size_t i = 0; i < 5; ++i) {
    if (row_space_contains(eqs, {unit(i)})) return std::nullopt;
  }
  // Equality classes of coordinates forced by the equations.
  std::array<int, 5> cls{0, 1, 2, 3, 4};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (row_space_contains(eqs, {difference(i, j)})) cls[j] = std::min(cls[j], cls[i]);
    }
  }
  std::vector<std::vector<unsigned>> blocks(5);
  for (unsigned i = 0; i < 5; ++i) blocks[static_cast<std::size_t>(cls[i])].push_back(i);
  std::vector<std::vector<unsigned>> nontrivial;
  for (auto& b : blocks) {
    if (b.size() > 1) nontrivial.push_back(b);
  }
  std::optional<LinearComponent> out;
  if (nontrivial.size() == 2 && nontrivial[0].size() == 2 && nontrivial[1].size() == 2) {
    out = LinearComponent::pair_pair(nontrivial[0][0], nontrivial[0][1], nontrivial[1][0], nontrivial[1][1]);
  } else if (nontrivial.size() == 1 && nontrivial[0].size() == 3) {
    out = LinearComponent::triple(nontrivial[0][0], nontrivial[0][1], nontrivial[0][2]);
  }
  // The recognized component must cut out exactly this subspace.
  if (out && rref(out->equations()) != eqs) return std::nullopt;
  return out;
}

}  // namespace

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Hyperplane: return "Hyperplane";
    case ComponentKind::PairPair: return "PairPair";
    case ComponentKind::Triple: return "Triple";
  }
  return "?";
}

LinearComponent LinearComponent::hyperplane(unsigned i) {
  if (i > 4) throw InvalidInput("coordinate index out of range");
  return LinearComponent(ComponentKind::Hyperplane, {static_cast<std::uint8_t>(i)});
}

LinearComponent LinearComponent::pair_pair(unsigned i, unsigned j, unsigned k, unsigned l) {
  const std::set<unsigned> all{i, j, k, l};
  if (all.size() != 4 || *all.rbegin() > 4) throw InvalidInput("pair-pair component needs 4 distinct indices in 0..4");
  std::array<unsigned, 2> p{std::min(i, j), std::max(i, j)};
  std::array<unsigned, 2> q{std::min(k, l), std::max(k, l)};
  if (q[0] < p[0]) std::swap(p, q);
  return LinearComponent(ComponentKind::PairPair,
                         {static_cast<std::uint8_t>(p[0]), static_cast<std::uint8_t>(p[1]),
                          static_cast<std::uint8_t>(q[0]), static_cast<std::uint8_t>(q[1])});
}

LinearComponent LinearComponent::triple(unsigned i, unsigned j, unsigned k) {
  std::array<unsigned, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2] || t[2] > 4) throw InvalidInput("triple component needs 3 distinct indices in 0..4");
  return LinearComponent(ComponentKind::Triple, {static_cast<std::uint8_t>(t[0]), static_cast<std::uint8_t>(t[1]),
                                                 static_cast<std::uint8_t>(t[2])});
}

std::string LinearComponent::name() const {
  auto a = [](unsigned i) { return "a" + std::to_string(i); };
  const auto& x = indices_;
  switch (kind_) {
    case ComponentKind::Hyperplane: return "V(" + a(x[0]) + ")";
    case ComponentKind::PairPair: return "V(" + a(x[0]) + "-" + a(x[1]) + ", " + a(x[2]) + "-" + a(x[3]) + ")";
    case ComponentKind::Triple: return "V(" + a(x[0]) + "-" + a(x[1]) + ", " + a(x[2]) + "-" + a(x[1]) + ")";
  }
  return "?";
}

RatMatrix LinearComponent::equations() const {
  const auto& x = indices_;
  switch (kind_) {
    case ComponentKind::Hyperplane: return {unit(x[0])};
    case ComponentKind::PairPair: return {difference(x[0], x[1]), difference(x[2], x[3])};
    case ComponentKind::Triple: return {difference(x[0], x[1]), difference(x[2], x[1])};
  }
  return {};
}

RatMatrix LinearComponent::parametrization() const {
  RatMatrix m(5, std::vector<Rat>(param_count(), Rat(0)));
  const auto& x = indices_;
  auto is_listed = [&](unsigned i) { return std::find(x.begin(), x.end(), i) != x.end(); };
  std::vector<unsigned> free;
  for (unsigned i = 0; i < 5; ++i) {
    if (!is_listed(i)) free.push_back(i);
  }
  switch (kind_) {
    case ComponentKind::Hyperplane:
      for (std::size_t k = 0; k < 4; ++k) m[free[k]][k] = Rat(1);
      break;
    case ComponentKind::PairPair:
      m[free[0]][0] = Rat(1);
      m[x[0]][1] = m[x[1]][1] = Rat(1);
      m[x[2]][2] = m[x[3]][2] = Rat(1);
      break;
    case ComponentKind::Triple:
      m[free[0]][0] = Rat(1);
      m[x[0]][1] = m[x[1]][1] = m[x[2]][1] = Rat(1);
      m[free[1]][2] = Rat(1);
      break;
  }
  return m;
}

std::vector<MultiPoly> LinearComponent::substitution() const {
  std::vector<MultiPoly> out;
  for (const auto& row : parametrization()) out.push_back(MultiPoly::linear(row));
  return out;
}

SylvesterPoint LinearComponent::point_at(std::span<const Rat> params) const {
  if (params.size() != param_count()) throw InvalidInput("wrong parameter count for component");
  const RatMatrix m = parametrization();
  std::array<Rat, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t k = 0; k < params.size(); ++k) a[i] += m[i][k] * params[k];
  }
  return SylvesterPoint(a);
}

SylvesterPoint LinearComponent::normal_form_at(std::span<const Rat> params) const {
  if (params.size() != param_count()) throw InvalidInput("wrong parameter count for component");
  switch (kind_) {
    case ComponentKind::Hyperplane: return SylvesterPoint({0, params[0], params[1], params[2], params[3]});
    case ComponentKind::PairPair: return SylvesterPoint({params[0], params[1], params[1], params[2], params[2]});
    case ComponentKind::Triple: return SylvesterPoint({params[0], params[1], params[1], params[1], params[2]});
  }
  throw std::logic_error("unknown component kind");
}

LinearComponent LinearComponent::permuted(const Permutation& pi) const {
  const auto& x = indices_;
  switch (kind_) {
    case ComponentKind::Hyperplane: return hyperplane(pi(x[0]));
    case ComponentKind::PairPair: return pair_pair(pi(x[0]), pi(x[1]), pi(x[2]), pi(x[3]));
    case ComponentKind::Triple: return triple(pi(x[0]), pi(x[1]), pi(x[2]));
  }
  throw std::logic_error("unknown component kind");
}

const std::vector<std::array<unsigned, 4>>& listed_pair_pairs() {
  static const std::vector<std::array<unsigned, 4>> list{
      {2, 3, 1, 4}, {1, 4, 0, 2}, {1, 4, 0, 3}, {2, 4, 1, 3}, {1, 3, 0, 2}, {1, 3, 0, 4}, {3, 4, 1, 2}, {3, 4, 0, 1},
      {3, 4, 0, 2}, {2, 3, 0, 1}, {2, 3, 0, 4}, {1, 2, 0, 3}, {1, 2, 0, 4}, {2, 4, 0, 1}, {2, 4, 0, 3}};
  return list;
}

const std::vector<std::array<unsigned, 3>>& listed_triples() {
  static const std::vector<std::array<unsigned, 3>> list{{2, 4, 1}, {3, 4, 2}, {3, 4, 1}, {3, 4, 0}, {1, 4, 0},
                                                         {2, 3, 0}, {2, 3, 1}, {1, 2, 0}, {1, 3, 0}, {2, 4, 0}};
  return list;
}

std::vector<LinearComponent> claimed_components() {
  std::vector<LinearComponent> hyperplanes;
  std::vector<LinearComponent> pair_pairs;
  std::vector<LinearComponent> triples;
  for (unsigned i = 0; i < 5; ++i) hyperplanes.push_back(LinearComponent::hyperplane(i));
  // Two disjoint pairs leave one index out: 5 choices x 3 pairings.
  for (unsigned out = 0; out < 5; ++out) {
    std::vector<unsigned> rest;
    for (unsigned i = 0; i < 5; ++i) {
      if (i != out) rest.push_back(i);
    }
    pair_pairs.push_back(LinearComponent::pair_pair(rest[0], rest[1], rest[2], rest[3]));
    pair_pairs.push_back(LinearComponent::pair_pair(rest[0], rest[2], rest[1], rest[3]));
    pair_pairs.push_back(LinearComponent::pair_pair(rest[0], rest[3], rest[1], rest[2]));
  }
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = i + 1; j < 5; ++j) {
      for (unsigned k = j + 1; k < 5; ++k) triples.push_back(LinearComponent::triple(i, j, k));
    }
  }

  std::set<LinearComponent> listed_pp;
  for (const auto& t : listed_pair_pairs()) listed_pp.insert(LinearComponent::pair_pair(t[0], t[1], t[2], t[3]));
  std::set<LinearComponent> listed_tr;
  for (const auto& t : listed_triples()) listed_tr.insert(LinearComponent::triple(t[0], t[1], t[2]));
  if (std::set<LinearComponent>(pair_pairs.begin(), pair_pairs.end()) != listed_pp || listed_pp.size() != 15 ||
      std::set<LinearComponent>(triples.begin(), triples.end()) != listed_tr || listed_tr.size() != 10) {
    throw std::logic_error("generated components disagree with the listed index tuples");
  }

  std::vector<LinearComponent> all = hyperplanes;
  all.insert(all.end(), pair_pairs.begin(), pair_pairs.end());
  all.insert(all.end(), triples.begin(), triples.end());
  std::sort(all.begin(), all.end());
  return all;
}

const std::array<FactoredSum, 5>& i100_partials() {
  static const std::array<FactoredSum, 5> partials = [] {
    std::array<FactoredSum, 5> out;
    for (std::size_t v = 0; v < 5; ++v) out[v] = i100_polynomial().derive(v);
    return out;
  }();
  return partials;
}

bool ComponentVerification::all() const {
  return i100_vanishes && std::all_of(partials_vanish.begin(), partials_vanish.end(), [](bool b) { return b; });
}

ComponentVerification verify_substitution(std::span<const MultiPoly> substitution) {
  ComponentVerification v;
  v.i100_vanishes = i100_polynomial().substitute(substitution).is_zero();
  for (std::size_t k = 0; k < 5; ++k) v.partials_vanish[k] = i100_partials()[k].substitute(substitution).is_identically_zero();
  return v;
}

ComponentVerification verify_component(const LinearComponent& c) { return verify_substitution(c.substitution()); }

bool verify_component_in_singular_locus(const LinearComponent& c) { return verify_component(c).all(); }

OracleResult arrangement_oracle() {
  OracleResult result;

  // Linear factors with multiplicity; monomial bases split into coordinate forms.
  std::vector<std::pair<std::vector<Rat>, unsigned>> forms;
  auto add_form = [&](std::vector<Rat> coeffs, unsigned mult) {
    for (auto& [f, m] : forms) {
      if (proportional(f, coeffs)) {
        m += mult;
        return;
      }
    }
    forms.emplace_back(std::move(coeffs), mult);
  };
  for (const auto& factor : i100_polynomial().factors()) {
    const MultiPoly& b = factor.base;
    if (b.total_degree() == 1 && b.constant_term().is_zero()) {
      std::vector<Rat> coeffs(5, Rat(0));
      for (const auto& [e, c] : b.terms()) {
        coeffs[static_cast<std::size_t>(std::find(e.begin(), e.end(), 1U) - e.begin())] = c;
      }
      add_form(std::move(coeffs), factor.exponent);
    } else if (b.num_terms() == 1) {
      const auto& e = b.terms().begin()->first;
      for (std::size_t i = 0; i < 5; ++i) {
        if (e[i] > 0) add_form(unit(i), e[i] * factor.exponent);
      }
    } else {
      throw std::logic_error("factor is neither linear nor a monomial: " + b.to_string());
    }
  }
  result.linear_factors = forms.size();

  auto is_coordinate = [](const std::vector<Rat>& f) {
    return std::count_if(f.begin(), f.end(), [](const Rat& r) { return !r.is_zero(); }) == 1;
  };

  std::set<RatMatrix> candidates;
  std::set<RatMatrix> difference_planes;
  for (const auto& [f, m] : forms) {
    if (m >= 2) candidates.insert(rref({f}));
  }
  for (std::size_t a = 0; a < forms.size(); ++a) {
    for (std::size_t b = a + 1; b < forms.size(); ++b) {
      RatMatrix plane = rref({forms[a].first, forms[b].first});
      if (!is_coordinate(forms[a].first) && !is_coordinate(forms[b].first)) {
        ++result.raw_difference_pairs;
        difference_planes.insert(plane);
      }
      candidates.insert(std::move(plane));
    }
  }
  result.distinct_difference_planes = difference_planes.size();
  result.candidates = candidates.size();

  for (const auto& c : candidates) {
    const bool contained = std::any_of(candidates.begin(), candidates.end(), [&](const RatMatrix& other) {
      return other.size() < c.size() && row_space_contains(c, other);
    });
    if (contained) {
      ++result.pruned;
      continue;
    }
    auto comp = recognize(c);
    if (!comp) throw std::logic_error("oracle produced an unrecognized linear component");
    result.components.push_back(*comp);
  }
  std::sort(result.components.begin(), result.components.end());
  return result;
}

SmoothnessReport smoothness_off_components(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("sample count must be positive");
  SeededRng rng(seed);
  SmoothnessReport report;
  report.samples = n;
  while (report.hyperplane_points.size() < n) {
    const unsigned i = static_cast<unsigned>(rng.uniform_int(0, 4));
    unsigned j = static_cast<unsigned>(rng.uniform_int(0, 3));
    if (j >= i) ++j;
    std::array<Rat, 5> a{};
    for (auto& x : a) x = random_rational(rng);
    a[j] = a[i];
    const SylvesterPoint p(a);
    if (!p.is_nondegenerate() || equal_pairs(p) != 1) {
      ++report.redraws;
      continue;
    }
    const bool some_partial = std::any_of(i100_partials().begin(), i100_partials().end(),
                                          [&](const FactoredSum& d) { return !d.eval(p.coeffs()).is_zero(); });
    if (!some_partial) ++report.hyperplane_failures;
    report.hyperplane_points.push_back(p);
  }
  while (report.generic_points.size() < n) {
    std::array<Rat, 5> a{};
    for (auto& x : a) x = random_rational(rng);
    const SylvesterPoint p(a);
    if (!p.is_nondegenerate() || equal_pairs(p) != 0) {
      ++report.redraws;
      continue;
    }
    if (i100(p).is_zero()) ++report.off_e_failures;
    report.generic_points.push_back(p);
  }
  return report;
}

std::optional<int> taylor_order_along(const SylvesterPoint& p, const std::array<Rat, 5>& direction,
                                      unsigned truncation) {
  // Row i of the Vandermonde matrix: 1, x_i, x_i^2, x_i^3, x_i^4 with x_i = p_i + eps v_i.
  std::array<std::array<Series, 5>, 5> rows{};
  Series sigma5(truncation, Rat(1));
  for (std::size_t i = 0; i < 5; ++i) {
    const Series x(truncation, p[i], direction[i]);
    rows[i][0] = Series(truncation, Rat(1));
    for (std::size_t k = 1; k < 5; ++k) rows[i][k] = rows[i][k - 1] * x;
    sigma5 = sigma5 * x;
  }
  // Column k holds x^k and row i holds point i, so det = prod_{i<j} (x_j - x_i).
  Series det(truncation);
  for (const auto& pi : all_permutations()) {
    Series term(truncation, Rat(1));
    for (std::size_t i = 0; i < 5; ++i) term = term * rows[i][pi(i)];
    det += term.scaled(pi.sign());
  }
  Series value = det;
  for (int k = 0; k < 18; ++k) value = value * sigma5;
  return value.order();
}

MultiplicityReport multiplicity_at(const SylvesterPoint& p, std::uint64_t seed, unsigned truncation) {
  if (!i100(p).is_zero()) throw NotOnHypersurface("I100 does not vanish at " + p.to_string());
  MultiplicityReport r{.point = p};
  r.zero_coordinates = p.zero_count();
  for (std::uint8_t i = 0; i < 5; ++i) {
    for (std::uint8_t j = i + 1; j < 5; ++j) {
      if (p[i] == p[j]) r.vanishing_differences.emplace_back(i, j);
    }
  }
  r.multiplicity = static_cast<int>(18 * r.zero_coordinates + r.vanishing_differences.size());
  if (r.zero_coordinates == 0) {
    bool pairwise_independent = true;
    for (std::size_t a = 0; a < r.vanishing_differences.size(); ++a) {
      for (std::size_t b = a + 1; b < r.vanishing_differences.size(); ++b) {
        const auto [i1, j1] = r.vanishing_differences[a];
        const auto [i2, j2] = r.vanishing_differences[b];
        if (proportional(difference(j1, i1), difference(j2, i2))) pairwise_independent = false;
      }
    }
    r.ordinary = pairwise_independent;
  }

  SeededRng rng(seed);
  for (int d = 0; d < 3; ++d) {
    // Distinct nonzero entries keep every vanishing factor of order exactly one along v.
    std::array<Rat, 5> v{};
    for (std::size_t i = 0; i < 5; ++i) {
      do {
        v[i] = random_nonzero(rng, 9);
      } while (std::find(v.begin(), v.begin() + i, v[i]) != v.begin() + i);
    }
    r.direction_orders.push_back(taylor_order_along(p, v, truncation));
  }
  r.directions_agree = std::all_of(r.direction_orders.begin(), r.direction_orders.end(),
                                   [&](const std::optional<int>& o) { return o == r.direction_orders.front(); });
  for (const auto& o : r.direction_orders) {
    if (o && (!r.taylor_order || *o < *r.taylor_order)) r.taylor_order = o;
  }
  return r;
}

FamilyTag image_family(const LinearComponent& c) {
  switch (c.kind()) {
    case ComponentKind::Hyperplane: return FamilyTag::Degenerate;
    case ComponentKind::PairPair: return FamilyTag::S1;
    case ComponentKind::Triple: return FamilyTag::S2;
  }
  return FamilyTag::Generic;
}

bool verify_image_family(const LinearComponent& c, std::size_t samples, std::uint64_t seed) {
  SeededRng rng(seed);
  const FamilyTag expected = image_family(c);
  std::size_t done = 0;
  while (done < samples) {
    std::vector<Rat> params(c.param_count());
    for (auto& x : params) x = random_nonzero(rng, 15);
    const SylvesterPoint point = c.point_at(params);
    if (c.kind() == ComponentKind::Hyperplane) {
      if (base_locus_forward(point)) continue;
      if (!is_q(salmon_invariants(point))) return false;
    } else {
      if (classify_family(point) != expected) continue;  // coincident parameters land on a curve
      const SylvesterPoint normal = c.normal_form_at(params);
      if (classify_family(normal) != expected) return false;
      if (salmon_values(point) != salmon_values(normal)) return false;
      if (!weighted_equal(salmon_invariants(point), salmon_invariants(normal))) return false;
    }
    ++done;
  }
  return true;
}

std::vector<ComponentIntersection> pair_pair_triple_intersections(std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<ComponentIntersection> out;
  const auto components = claimed_components();
  for (const auto& pp : components) {
    if (pp.kind() != ComponentKind::PairPair) continue;
    for (const auto& tr : components) {
      if (tr.kind() != ComponentKind::Triple) continue;
      RatMatrix eqs = pp.equations();
      const RatMatrix more = tr.equations();
      eqs.insert(eqs.end(), more.begin(), more.end());
      const RatMatrix basis = null_space(eqs, 5);
      ComponentIntersection x{pp, tr, basis.size() - 1};
      while (true) {
        std::array<Rat, 5> a{};
        for (const auto& v : basis) {
          const Rat t = random_nonzero(rng, 20);
          for (std::size_t i = 0; i < 5; ++i) a[i] += t * v[i];
        }
        if (std::all_of(a.begin(), a.end(), [](const Rat& r) { return r.is_zero(); })) continue;
        const SylvesterPoint p(a);
        x.sample_family = classify_family(p);
        // Reject non-generic draws on a curve (coincident values or a zero).
        if (basis.size() == 2 && (x.sample_family == FamilyTag::Clebsch || x.sample_family == FamilyTag::Degenerate)) {
          continue;
        }
        break;
      }
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace eckardt
