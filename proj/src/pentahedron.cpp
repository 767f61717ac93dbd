#include "eckardt/pentahedron.hpp"

#include <algorithm>
#include <complex>
#include <set>

#include "eckardt/arith/rat_matrix.hpp"
#include "eckardt/errors.hpp"

namespace eckardt {

namespace {

std::vector<Rat> to_vector(std::span<const Rat> v) { return {v.begin(), v.end()}; }

bool binary_cubic_vanishes(const MultiPoly& cubic, std::span<const Rat> p, std::span<const Rat> q) {
  if (proportional(to_vector(p), to_vector(q))) throw InvalidInput("line needs two distinct points");
  const std::size_t n = p.size();
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) images.push_back(MultiPoly::linear(std::array<Rat, 2>{p[k], q[k]}));
  return cubic.substitute(images).is_zero();
}

}  // namespace

CubicForm3::CubicForm3(std::array<Rat, kNumMonomials> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r.is_zero(); })) {
    throw InvalidInput("cubic form is identically zero");
  }
}

const std::array<CubicForm3::Monomial, CubicForm3::kNumMonomials>& CubicForm3::monomials() {
  static const auto table = [] {
    std::array<Monomial, kNumMonomials> out{};
    std::size_t k = 0;
    for (int a = 3; a >= 0; --a) {
      for (int b = 3 - a; b >= 0; --b) {
        for (int c = 3 - a - b; c >= 0; --c) {
          out[k++] = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c),
                      static_cast<std::uint32_t>(3 - a - b - c)};
        }
      }
    }
    return out;
  }();
  return table;
}

std::size_t CubicForm3::index_of(const Monomial& m) {
  const auto& table = monomials();
  auto it = std::find(table.begin(), table.end(), m);
  if (it == table.end()) throw InvalidInput("not a cubic monomial in 4 variables");
  return static_cast<std::size_t>(it - table.begin());
}

CubicForm3 CubicForm3::from_poly(const MultiPoly& p) {
  if (p.num_vars() != 4) throw InvalidInput("cubic form needs 4 variables");
  std::array<Rat, kNumMonomials> coeffs{};
  for (const auto& [e, c] : p.terms()) {
    if (degree_of(e) != 3) throw InvalidInput("polynomial is not a homogeneous cubic");
    coeffs[index_of({e[0], e[1], e[2], e[3]})] = c;
  }
  return CubicForm3(coeffs);
}

MultiPoly CubicForm3::to_poly() const {
  MultiPoly p(4);
  const auto& table = monomials();
  for (std::size_t k = 0; k < kNumMonomials; ++k) {
    p.add_term(Exponents(table[k].begin(), table[k].end()), coeffs_[k]);
  }
  return p;
}

Rat CubicForm3::eval(const P3Point& x) const { return to_poly().eval(x); }

CubicForm3 to_cubic_p3(const SylvesterPoint& s) {
  MultiPoly f(4);
  MultiPoly sum(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const MultiPoly xi = MultiPoly::variable(4, i);
    f += s[i] * xi.pow(3);
    sum += xi;
  }
  f -= s[4] * sum.pow(3);
  return CubicForm3::from_poly(f);
}

PentVertex::PentVertex(unsigned a, unsigned b) {
  if (a == b || a > 4 || b > 4) throw InvalidInput("pentahedron vertex needs two distinct indices in 0..4");
  i = static_cast<std::uint8_t>(std::min(a, b));
  j = static_cast<std::uint8_t>(std::max(a, b));
}

P4Point PentVertex::z() const {
  P4Point out{0, 0, 0, 0, 0};
  out[i] = Rat(1);
  out[j] = Rat(-1);
  return out;
}

P3Point PentVertex::p3() const {
  const P4Point full = z();
  return {full[0], full[1], full[2], full[3]};
}

std::string PentVertex::name() const { return "A" + std::to_string(i) + std::to_string(j); }

std::vector<PentVertex> eckardt_vertices(const SylvesterPoint& s) {
  if (!s.is_nondegenerate()) {
    throw DegenerateForm("degenerate Sylvester form " + s.to_string() +
                         ": the vertex criterion needs all a_i nonzero; use the numeric detector");
  }
  std::vector<PentVertex> out;
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = i + 1; j < 5; ++j) {
      if (s[i] == s[j]) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Generic: return "Generic";
    case FamilyTag::E1: return "E1";
    case FamilyTag::S1: return "S1";
    case FamilyTag::S2: return "S2";
    case FamilyTag::C1: return "C1";
    case FamilyTag::C2: return "C2";
    case FamilyTag::Clebsch: return "Clebsch";
    case FamilyTag::Degenerate: return "Degenerate";
  }
  return "?";
}

FamilyTag classify_family(const SylvesterPoint& s) {
  if (!s.is_nondegenerate()) return FamilyTag::Degenerate;
  std::vector<int> blocks;
  std::array<bool, 5> used{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (used[i]) continue;
    int size = 0;
    for (std::size_t j = i; j < 5; ++j) {
      if (!used[j] && s[j] == s[i]) {
        used[j] = true;
        ++size;
      }
    }
    blocks.push_back(size);
  }
  std::sort(blocks.rbegin(), blocks.rend());
  if (blocks == std::vector<int>{1, 1, 1, 1, 1}) return FamilyTag::Generic;
  if (blocks == std::vector<int>{2, 1, 1, 1}) return FamilyTag::E1;
  if (blocks == std::vector<int>{2, 2, 1}) return FamilyTag::S1;
  if (blocks == std::vector<int>{3, 1, 1}) return FamilyTag::S2;
  if (blocks == std::vector<int>{3, 2}) return FamilyTag::C1;
  if (blocks == std::vector<int>{4, 1}) return FamilyTag::C2;
  return FamilyTag::Clebsch;
}

int eckardt_count(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Generic: return 0;
    case FamilyTag::E1: return 1;
    case FamilyTag::S1: return 2;
    case FamilyTag::S2: return 3;
    case FamilyTag::C1: return 4;
    case FamilyTag::C2: return 6;
    case FamilyTag::Clebsch: return 10;
    case FamilyTag::Degenerate: return -1;
  }
  return -1;
}

SylvesterPoint sample_family_point(FamilyTag tag, SeededRng& rng, bool shuffle) {
  // Position k takes value number layout[k]; unshuffled layouts are the usual normal forms.
  std::array<int, 5> layout{0, 1, 2, 3, 4};
  switch (tag) {
    case FamilyTag::Generic: break;
    case FamilyTag::E1: layout = {0, 0, 1, 2, 3}; break;
    case FamilyTag::S1: layout = {0, 1, 1, 2, 2}; break;
    case FamilyTag::S2: layout = {0, 1, 1, 1, 2}; break;
    case FamilyTag::C1: layout = {0, 1, 1, 1, 0}; break;
    case FamilyTag::C2: layout = {0, 1, 1, 1, 1}; break;
    case FamilyTag::Clebsch: layout = {0, 0, 0, 0, 0}; break;
    case FamilyTag::Degenerate: break;
  }
  const auto distinct = static_cast<std::size_t>(*std::max_element(layout.begin(), layout.end()) + 1);
  std::vector<long> values;
  while (values.size() < distinct) {
    const long v = rng.uniform_int(-12, 12);
    if (v != 0 && std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  if (tag == FamilyTag::Degenerate) values[0] = 0;
  std::array<Rat, 5> a{};
  for (std::size_t k = 0; k < 5; ++k) a[k] = Rat(values[static_cast<std::size_t>(layout[k])]);
  SylvesterPoint s(a);
  if (!shuffle) return s;
  const auto& perms = all_permutations();
  return s.permuted(perms[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(perms.size()) - 1))]);
}

SylvesterPoint sample_smooth_family_point(FamilyTag tag, SeededRng& rng, bool shuffle) {
  for (;;) {
    const SylvesterPoint s = sample_family_point(tag, rng, shuffle);
    if (is_smooth(s)) return s;
  }
}

bool is_smooth(const SylvesterPoint& s) {
  const std::size_t zeros = s.zero_count();
  if (zeros >= 2) return false;  // the line z_i = -z_j through two dead coordinates
  if (zeros == 1) return true;
  // Singular points have 3 a_i z_i^2 = lambda for all i, so z_i = e_i / sqrt(a_i) with sum zero.
  std::array<std::complex<double>, 5> r;
  double scale = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    r[i] = 1.0 / std::sqrt(std::complex<double>(s[i].to_double()));
    scale = std::max(scale, std::abs(r[i]));
  }
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::complex<double> sum = r[4];
    for (std::size_t i = 0; i < 4; ++i) sum += ((mask >> i) & 1U) ? -r[i] : r[i];
    if (std::abs(sum) < 1e-9 * scale) return false;
  }
  return true;
}

PermSubgroup::PermSubgroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!contains(Permutation::identity())) throw InvalidInput("subgroup must contain the identity");
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) throw InvalidInput("subgroup not closed under inverse");
    for (const auto& b : elements_) {
      if (!contains(compose(a, b))) throw InvalidInput("subgroup not closed under composition");
    }
  }
}

bool PermSubgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermSubgroup::is_abelian() const {
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (compose(a, b) != compose(b, a)) return false;
    }
  }
  return true;
}

std::map<int, int> PermSubgroup::order_histogram() const {
  std::map<int, int> hist;
  for (const auto& p : elements_) ++hist[p.order()];
  return hist;
}

PermSubgroup stabilizer(const SylvesterPoint& s) {
  std::vector<Permutation> fixing;
  for (const auto& pi : all_permutations()) {
    if (s.permuted(pi) == s) fixing.push_back(pi);
  }
  return PermSubgroup(std::move(fixing));
}

bool contains_line(const CubicForm3& f, const P3Point& p, const P3Point& q) {
  return binary_cubic_vanishes(f.to_poly(), p, q);
}

bool contains_line(const SylvesterPoint& s, const P4Point& p, const P4Point& q) {
  auto on_hyperplane = [](const P4Point& z) {
    Rat sum(0);
    for (const auto& v : z) sum += v;
    return sum.is_zero();
  };
  if (!on_hyperplane(p) || !on_hyperplane(q)) throw InvalidInput("points must lie on the hyperplane sum z = 0");
  MultiPoly cubic(5);
  for (std::size_t i = 0; i < 5; ++i) cubic += s[i] * MultiPoly::variable(5, i).pow(3);
  return binary_cubic_vanishes(cubic, p, q);
}

bool collinear(const std::vector<std::vector<Rat>>& points) {
  if (points.size() < 3) throw InvalidInput("collinearity needs at least 3 points");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidInput("points of different dimension");
    if (std::all_of(p.begin(), p.end(), [](const Rat& r) { return r.is_zero(); })) {
      throw InvalidInput("zero vector is not a projective point");
    }
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (proportional(points[a], points[b])) throw InvalidInput("collinearity needs pairwise distinct points");
    }
  }
  return rank(points) == 2;
}

}  // namespace eckardt
