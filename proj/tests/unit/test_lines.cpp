#include <doctest.h>

#include "eckardt/errors.hpp"
#include "eckardt/lines.hpp"
#include "eckardt/rng.hpp"

using namespace eckardt;

namespace {

SylvesterPoint sp(std::array<Rat, 5> a) { return SylvesterPoint(a); }

ComplexCubic cubic_of(const SylvesterPoint& s) { return ComplexCubic::from(to_cubic_p3(s)); }

double restriction_norm(const ComplexCubic& f, const ComplexLine& l) {
  double m = 0;
  for (const auto& c : f.normalized().restrict_to_line(l.p, l.q)) m = std::max(m, std::abs(c));
  return m;
}

// Every line of a has a partner in b within tol.
bool same_lines(const std::vector<ComplexLine>& a, const std::vector<ComplexLine>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& l : a) {
    if (std::none_of(b.begin(), b.end(), [&](const ComplexLine& m) { return l.distance(m) < tol; })) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("line system shape") {
  const auto sys = line_system(cubic_of(sp({1, 2, 3, 4, 5})));
  for (const auto& eq : sys) CHECK(eq.total_degree() == 3);
}

TEST_CASE("known fermat line is a chart solution after a coordinate change") {
  const ComplexCubic fermat = cubic_of(sp({1, 1, 1, 1, 0}));
  SeededRng rng(3);
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rng.complex_in_box();
  const ComplexCubic g = fermat.transformed(m);  // g(y) = f(M y)

  CVec4 a, b;
  a << 1, -1, 0, 0;
  b << 0, 0, 1, -1;
  const CVec4 ya = m.inverse() * a, yb = m.inverse() * b;
  // Points of the line with (y0, y1) = (1, 0) and (0, 1).
  Eigen::Matrix2cd base;
  base << ya(0), yb(0), ya(1), yb(1);
  const Eigen::Matrix2cd w = base.inverse();
  const CVec4 e0 = w(0, 0) * ya + w(1, 0) * yb;
  const CVec4 e1 = w(0, 1) * ya + w(1, 1) * yb;
  Eigen::VectorXcd pqrs(4);
  pqrs << e0(2), e1(2), e0(3), e1(3);
  for (const auto& eq : line_system(g.normalized())) CHECK(std::abs(eq.eval(pqrs)) < 1e-10);
}

TEST_CASE("fermat surface: 27 lines and 18 eckardt points") {
  const ComplexCubic f = cubic_of(sp({1, 1, 1, 1, 0}));
  const TrackResult r = track_all(f, TrackerConfig{});
  REQUIRE(r.lines.size() == 27);
  for (const auto& l : r.lines) {
    CHECK(restriction_norm(f, l) < 1e-8);
    CHECK(l.plucker_quadric_residual() <= 1e-9);
  }
  const EckardtNumeric e = eckardt_numeric(r.lines, f, 1e-6);
  CHECK(e.clusters.size() == 18);
  for (const auto& c : e.clusters) {
    CHECK(c.lines.size() == 3);
    CHECK(c.surface_residual < 1e-8);
  }
}

TEST_CASE("clebsch and generic counts") {
  const ComplexCubic clebsch = cubic_of(sp({1, 1, 1, 1, 1}));
  const TrackResult r = track_all(clebsch, TrackerConfig{});
  REQUIRE(r.lines.size() == 27);
  CHECK(eckardt_numeric(r.lines, clebsch, 1e-6).clusters.size() == 10);

  const ComplexCubic generic = cubic_of(sp({1, 2, 3, 4, 5}));
  const TrackResult g = track_all(generic, TrackerConfig{});
  REQUIRE(g.lines.size() == 27);
  CHECK(eckardt_numeric(g.lines, generic, 1e-6).clusters.empty());
}

TEST_CASE("a cone is reported as singular") {
  const MultiPoly x0 = MultiPoly::variable(4, 0), x1 = MultiPoly::variable(4, 1), x2 = MultiPoly::variable(4, 2);
  const ComplexCubic cone = ComplexCubic::from(CubicForm3::from_poly(x0.pow(3) + x1.pow(3) + x2.pow(3)));
  CHECK_THROWS_AS(track_all(cone, TrackerConfig{}), SingularSurface);
}

TEST_CASE("tracking is deterministic and independent of thread count") {
  const ComplexCubic f = cubic_of(sp({3, -1, 2, 7, 5}));
  TrackerConfig one;
  one.threads = 1;
  TrackerConfig many;
  many.threads = 4;
  const TrackResult a = track_all(f, one);
  const TrackResult b = track_all(f, many);
  REQUIRE(a.lines.size() == 27);
  REQUIRE(b.lines.size() == 27);
  for (std::size_t k = 0; k < 27; ++k) {
    CHECK(a.lines[k].p == b.lines[k].p);
    CHECK(a.lines[k].q == b.lines[k].q);
  }
}

TEST_CASE("two charts give the same lines") {
  const ComplexCubic f = cubic_of(sp({3, -1, 2, 7, 5}));
  TrackerConfig c1;
  c1.seed = 1;
  TrackerConfig c2;
  c2.seed = 2;
  const TrackResult a = track_all(f, c1);
  const TrackResult b = track_all(f, c2);
  CHECK(same_lines(a.lines, b.lines, 1e-6));
}

TEST_CASE("cross validation on the family representatives") {
  CHECK(cross_validate(sp({1, 2, 2, 3, 3}), TrackerConfig{}, 1e-6).exact.size() == 2);
  for (const auto& s : {sp({1, 2, 2, 3, 3}), sp({1, 2, 2, 2, 3}), sp({1, 2, 2, 2, 1}), sp({1, 2, 2, 2, 2})}) {
    const CrossValidation cv = cross_validate(s, TrackerConfig{}, 1e-6);
    INFO(s.to_string());
    CHECK(cv.ok());
    CHECK(cv.numeric.clusters.size() == cv.exact.size());
  }
}

TEST_CASE("tracker config validation") {
  TrackerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.endgame_start = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = TrackerConfig{};
  cfg.corrector_tol = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = TrackerConfig{};
  cfg.paths = 100;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}

TEST_CASE("plucker coordinates") {
  CVec4 a, b;
  a << 1, 0, 0, 0;
  b << 0, 1, 0, 0;
  const ComplexLine l = ComplexLine::through(a, b);
  CHECK(l.plucker_quadric_residual() < 1e-12);
  CHECK(l.distance(ComplexLine::through(a + b, a - b)) < 1e-12);
  CVec4 c;
  c << 0, 0, 1, 0;
  CHECK(l.distance(ComplexLine::through(a, c)) > 0.1);
  CHECK_THROWS_AS(ComplexLine::through(a, 2.0 * a), InvalidInput);
}
