#include <doctest.h>

#include <cmath>
#include <vector>

#include "eckardt/arith/factored_poly.hpp"
#include "eckardt/arith/multi_poly.hpp"
#include "eckardt/arith/rat.hpp"
#include "eckardt/arith/rat_matrix.hpp"
#include "eckardt/arith/symmetric.hpp"
#include "eckardt/errors.hpp"
#include "eckardt/invariants.hpp"
#include "eckardt/rng.hpp"

using namespace eckardt;

namespace {

MultiPoly var(std::size_t i) { return MultiPoly::variable(5, i); }

std::vector<Rat> random_point(SeededRng& rng, std::size_t n = 5) {
  std::vector<Rat> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(rng.uniform_int(-20, 20), rng.uniform_int(1, 6));
  return p;
}

MultiPoly random_poly(SeededRng& rng, int max_degree, int terms) {
  MultiPoly f = MultiPoly::constant(5, Rat(0));
  for (int t = 0; t < terms; ++t) {
    Exponents e(5, 0);
    int budget = static_cast<int>(rng.uniform_int(0, max_degree));
    while (budget-- > 0) ++e[rng.uniform_int(0, 4)];
    f.add_term(e, Rat(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
  }
  return f;
}

}  // namespace

TEST_CASE("rat parse and print") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-7").to_string() == "-7");
  CHECK(Rat(4, -6).to_string() == "-2/3");
  CHECK_THROWS_AS(Rat::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rat::parse("x"), InvalidInput);
  CHECK(Rat(2).pow(10) == Rat(1024));
  CHECK(Rat(-3, 4).inverse() == Rat(-4, 3));
}

TEST_CASE("elementary symmetric polynomials") {
  CHECK(elem_sym(1).num_terms() == 5);
  CHECK(elem_sym(5).num_terms() == 1);
  CHECK(elem_sym(5) == var(0) * var(1) * var(2) * var(3) * var(4));
  const std::vector<Rat> ones(5, Rat(1));
  CHECK(elem_sym(2).eval(ones) == Rat(10));
  CHECK_THROWS_AS(elem_sym(0), InvalidInput);
  CHECK_THROWS_AS(elem_sym(6), InvalidInput);
}

TEST_CASE("newton identity check against expanded prod (t - a_i)") {
  SeededRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_point(rng);
    // Univariate product in t, stored as a 1-variable MultiPoly.
    MultiPoly prod = MultiPoly::constant(1, Rat(1));
    for (const auto& ai : a) prod = prod * (MultiPoly::variable(1, 0) - MultiPoly::constant(1, ai));
    std::array<Rat, 5> arr;
    std::copy(a.begin(), a.end(), arr.begin());
    const auto sig = elem_sym_values(arr);
    for (std::size_t k = 1; k <= 5; ++k) {
      const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
      CHECK(prod.coefficient({static_cast<std::uint32_t>(5 - k)}) == sign * sig[k - 1]);
      CHECK(elem_sym(k).eval(a) == sig[k - 1]);
    }
  }
}

TEST_CASE("multipoly ring homomorphism under evaluation") {
  SeededRng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly f = random_poly(rng, 4, 6);
    const MultiPoly g = random_poly(rng, 4, 6);
    const auto p = random_point(rng);
    CHECK((f * g).eval(p) == f.eval(p) * g.eval(p));
    CHECK((f + g).eval(p) == f.eval(p) + g.eval(p));
    CHECK((f - g).eval(p) == f.eval(p) - g.eval(p));
  }
}

TEST_CASE("grlex printing is deterministic") {
  const MultiPoly f = var(0) * var(0) + var(1) * Rat(3) - MultiPoly::constant(5, Rat(2));
  CHECK(f.to_string() == "x0^2 + 3*x1 - 2");
  CHECK(f.to_string({"a0", "a1", "a2", "a3", "a4"}) == "a0^2 + 3*a1 - 2");
  CHECK(f.total_degree() == 2);
  CHECK(f.leading_coefficient() == Rat(1));
}

TEST_CASE("substitution") {
  // (a0 - a1) under a0 -> s, a1 -> s is zero.
  const MultiPoly s = MultiPoly::variable(1, 0);
  const std::vector<MultiPoly> same{s, s, s, s, s};
  CHECK((var(0) - var(1)).substitute(same).is_zero());

  std::vector<MultiPoly> identity;
  for (std::size_t i = 0; i < 5; ++i) identity.push_back(var(i));
  CHECK(elem_sym(5).substitute(identity) == elem_sym(5));

  // Vandermonde under (a,b,b,c,c) vanishes.
  const MultiPoly a = MultiPoly::variable(3, 0), b = MultiPoly::variable(3, 1), c = MultiPoly::variable(3, 2);
  const std::vector<MultiPoly> s1{a, b, b, c, c};
  const FactoredPoly vdm = i100_polynomial();
  CHECK(vdm.substitute(s1).is_zero());
}

TEST_CASE("factored polynomial evaluation") {
  const std::vector<Rat> p{1, 2, 3, 4, 5};
  CHECK(elem_sym(5).eval(p) == Rat(120));

  std::vector<Factor> diffs;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) diffs.push_back({var(j) - var(i), 1});
  const FactoredPoly vdm(5, Rat(1), diffs);
  CHECK(vdm.eval(p) == Rat(288));

  CHECK(i100_polynomial().eval(p) == Rat(120).pow(18) * Rat(288));
  CHECK(i100_polynomial().eval(std::vector<Rat>{1, 1, 2, 3, 4}).is_zero());
  CHECK(i100_polynomial().total_degree() == 100);
}

TEST_CASE("factored derivative") {
  const FactoredPoly sq(5, Rat(1), {{var(0) - var(1), 2}});
  const FactoredSum d = sq.derive(0);
  REQUIRE(d.summands().size() == 1);
  CHECK(d.summands()[0].scalar() == Rat(2));
  CHECK(d.summands()[0].factors() == std::vector<Factor>{{var(0) - var(1), 1}});

  const FactoredPoly cube(5, Rat(1), {{var(1) - var(2), 3}});
  CHECK(cube.derive(0).empty());
}

TEST_CASE("factored derivative matches expanded derivative") {
  SeededRng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Factor> fs;
    int degree = 0;
    while (degree < 9) {
      MultiPoly base = random_poly(rng, 2, 3);
      if (base.is_constant()) continue;
      const unsigned e = static_cast<unsigned>(rng.uniform_int(1, 2));
      degree += base.total_degree() * static_cast<int>(e);
      fs.push_back({base, e});
    }
    const FactoredPoly f(5, Rat(rng.uniform_int(1, 5)), fs);
    if (f.total_degree() > 12) continue;
    const MultiPoly expanded = f.expand(12);
    const auto p = random_point(rng);
    for (std::size_t v = 0; v < 5; ++v) CHECK(f.derive(v).eval(p) == expanded.derive(v).eval(p));
  }
}

TEST_CASE("i100 partial matches central finite difference") {
  // f is about 7e39 here, well inside double range.
  const std::vector<double> x{1, 2, 3, 4, 5};
  auto f = [](const std::vector<double>& a) {
    double s5 = 1, v = 1;
    for (double ai : a) s5 *= ai;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) v *= a[j] - a[i];
    return std::pow(s5, 18) * v;
  };
  const double h = 1e-4;
  const std::vector<Rat> exact{1, 2, 3, 4, 5};
  for (std::size_t var_index = 0; var_index < 5; ++var_index) {
    auto plus = x, minus = x;
    plus[var_index] += h;
    minus[var_index] -= h;
    const double fd = (f(plus) - f(minus)) / (2 * h);
    const double sym = i100_polynomial().derive(var_index).eval(exact).to_double();
    CHECK(std::abs(fd - sym) <= 1e-6 * std::abs(sym));
  }
}

TEST_CASE("i100 evaluation never expands") {
  const std::size_t before = FactoredPoly::expansion_count();
  SeededRng rng(7);
  Rat acc(0);
  for (int k = 0; k < 1000; ++k) acc += i100_polynomial().eval(random_point(rng));
  CHECK(FactoredPoly::expansion_count() == before);
  CHECK_THROWS(i100_polynomial().expand(64));
}

TEST_CASE("factored sum identity testing") {
  // d/da0 of (a0-a1)^2 (a0-a2) restricted to a0=a1=s: every summand keeps a factor (a0-a1).
  const FactoredPoly f(5, Rat(1), {{var(0) - var(1), 2}, {var(0) - var(2), 1}});
  const MultiPoly s = MultiPoly::variable(2, 0), t = MultiPoly::variable(2, 1);
  const std::vector<MultiPoly> on{s, s, t, t, t};
  const std::vector<MultiPoly> off{s, t, t, t, t};
  CHECK(f.derive(0).substitute(on).is_identically_zero());
  CHECK_FALSE(f.derive(0).substitute(off).is_identically_zero());
}

TEST_CASE("rational matrices") {
  const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(m) == 2);
  const RatMatrix ns = null_space(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rat dot(0);
    for (std::size_t k = 0; k < 3; ++k) dot += row[k] * ns[0][k];
    CHECK(dot.is_zero());
  }
  CHECK(row_space_contains(m, RatMatrix{{1, 3, 4}}));
  CHECK_FALSE(row_space_contains(m, RatMatrix{{0, 0, 1}}));
  CHECK(proportional({1, -2, 0}, {Rat(-1, 2), 1, 0}));
  CHECK_FALSE(proportional({1, 0}, {1, 1}));
}
