#include <doctest.h>

#include <set>

#include "eckardt/errors.hpp"
#include "eckardt/pentahedron.hpp"
#include "eckardt/rng.hpp"

using namespace eckardt;

namespace {

SylvesterPoint sp(std::array<Rat, 5> a) { return SylvesterPoint(a); }

std::set<std::string> names(const std::vector<PentVertex>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(v.name());
  return out;
}

std::vector<Rat> vec(const P4Point& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST_CASE("cubic in P3 from a Sylvester form") {
  const CubicForm3 fermat = to_cubic_p3(sp({1, 1, 1, 1, 0}));
  const MultiPoly x0 = MultiPoly::variable(4, 0), x1 = MultiPoly::variable(4, 1);
  const MultiPoly x2 = MultiPoly::variable(4, 2), x3 = MultiPoly::variable(4, 3);
  CHECK(fermat.to_poly() == x0.pow(3) + x1.pow(3) + x2.pow(3) + x3.pow(3));

  const CubicForm3 cone = to_cubic_p3(sp({0, 0, 0, 0, 1}));
  CHECK(cone.to_poly() == (x0 + x1 + x2 + x3).pow(3) * Rat(-1));
  CHECK(cone.to_poly().coefficient({2, 1, 0, 0}) == Rat(-3));
}

TEST_CASE("eckardt vertices") {
  CHECK(names(eckardt_vertices(sp({5, 2, 2, 7, 7}))) == std::set<std::string>{"A12", "A34"});
  CHECK(eckardt_vertices(sp({1, 1, 1, 1, 1})).size() == 10);
  CHECK(eckardt_vertices(sp({1, 2, 3, 4, 5})).empty());
  CHECK_THROWS_AS(eckardt_vertices(sp({0, 1, 2, 3, 4})), DegenerateForm);
}

TEST_CASE("family classification") {
  CHECK(classify_family(sp({7, 3, 3, 5, 5})) == FamilyTag::S1);
  CHECK(classify_family(sp({2, 9, 9, 9, 2})) == FamilyTag::C1);
  CHECK(classify_family(sp({1, 1, 1, 1, 1})) == FamilyTag::Clebsch);
  CHECK(classify_family(sp({1, 2, 3, 4, 5})) == FamilyTag::Generic);
  CHECK(classify_family(sp({1, 1, 3, 4, 5})) == FamilyTag::E1);
  CHECK(classify_family(sp({1, 2, 2, 2, 3})) == FamilyTag::S2);
  CHECK(classify_family(sp({1, 2, 2, 2, 2})) == FamilyTag::C2);
  CHECK(classify_family(sp({1, 1, 1, 1, 0})) == FamilyTag::Degenerate);
}

TEST_CASE("vertex count follows the family") {
  SeededRng rng(17);
  for (auto tag : {FamilyTag::Generic, FamilyTag::E1, FamilyTag::S1, FamilyTag::S2, FamilyTag::C1, FamilyTag::C2,
                   FamilyTag::Clebsch}) {
    for (int k = 0; k < 10; ++k) {
      const auto s = sample_family_point(tag, rng);
      CHECK(classify_family(s) == tag);
      CHECK(static_cast<int>(eckardt_vertices(s).size()) == eckardt_count(tag));
    }
  }
}

TEST_CASE("stabilizers") {
  const auto s1 = stabilizer(sp({5, 2, 2, 7, 7}));
  CHECK(s1.order() == 4);
  CHECK(s1.is_abelian());
  CHECK(s1.order_histogram() == std::map<int, int>{{1, 1}, {2, 3}});
  CHECK(stabilizer(sp({1, 1, 1, 1, 1})).order() == 120);
  CHECK(stabilizer(sp({1, 2, 3, 4, 5})).order() == 1);

  const auto s2 = stabilizer(sp({1, 2, 2, 2, 3}));
  CHECK(s2.order() == 6);
  CHECK_FALSE(s2.is_abelian());
  CHECK(stabilizer(sp({1, 2, 2, 2, 1})).order() == 12);
  CHECK(stabilizer(sp({1, 2, 2, 2, 2})).order() == 24);
}

TEST_CASE("vertex equivariance") {
  SeededRng rng(21);
  const auto s = sample_family_point(FamilyTag::C1, rng);
  const auto base = eckardt_vertices(s);
  for (const auto& pi : all_permutations()) {
    std::set<std::pair<int, int>> expected;
    for (const auto& v : base) {
      const int a = pi(v.i), b = pi(v.j);
      expected.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<std::pair<int, int>> got;
    for (const auto& v : eckardt_vertices(s.permuted(pi))) got.insert({v.i, v.j});
    CHECK(got == expected);
  }
}

TEST_CASE("lines through vertices") {
  const auto s1 = sp({5, 2, 2, 7, 7});
  CHECK(contains_line(s1, PentVertex(1, 2).z(), PentVertex(3, 4).z()));

  const auto s2 = sp({1, 2, 2, 2, 3});
  CHECK_FALSE(contains_line(s2, PentVertex(1, 2).z(), PentVertex(1, 3).z()));

  const auto c1 = sp({1, 2, 2, 2, 1});
  for (const auto& v : {PentVertex(1, 2), PentVertex(1, 3), PentVertex(2, 3)})
    CHECK(contains_line(c1, PentVertex(0, 4).z(), v.z()));

  // The same check on the P3 model.
  CHECK(contains_line(to_cubic_p3(s1), PentVertex(1, 2).p3(), PentVertex(3, 4).p3()));
}

TEST_CASE("collinearity") {
  CHECK(collinear({vec(PentVertex(1, 2).z()), vec(PentVertex(1, 3).z()), vec(PentVertex(2, 3).z())}));
  CHECK_FALSE(collinear({vec(PentVertex(1, 2).z()), vec(PentVertex(3, 4).z()), vec(PentVertex(0, 1).z())}));
  CHECK_THROWS_AS(collinear({vec(PentVertex(1, 2).z()), vec(PentVertex(1, 2).z()), vec(PentVertex(0, 1).z())}),
                  InvalidInput);
}

TEST_CASE("C2 vertices lie on one face") {
  for (const auto& v : eckardt_vertices(sp({1, 2, 2, 2, 2}))) CHECK(v.on_face(0));
}
