#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eckardt/invariants.hpp"
#include "eckardt/pentahedron.hpp"

namespace eckardt {

using Complex = std::complex<double>;
using CVec4 = Eigen::Vector4cd;
using CVec6 = Eigen::Matrix<Complex, 6, 1>;

/// Cubic form in x0..x3 with complex coefficients, same monomial order as CubicForm3.
struct ComplexCubic {
  std::array<Complex, CubicForm3::kNumMonomials> coeffs{};

  static ComplexCubic from(const CubicForm3& f);
  Complex eval(const CVec4& x) const;
  /// y -> f(M y).
  ComplexCubic transformed(const Eigen::Matrix4cd& m) const;
  /// Largest coefficient modulus.
  double max_norm() const;
  ComplexCubic normalized() const;
  /// Coefficients of f(u p + v q) at u^3, u^2 v, u v^2, v^3.
  std::array<Complex, 4> restrict_to_line(const CVec4& p, const CVec4& q) const;
};

/// Sparse polynomial with complex coefficients in up to 5 variables.
class ComplexPoly {
 public:
  using Monomial = std::array<std::uint8_t, 5>;
  struct Term {
    Monomial exponents{};
    Complex coeff;
  };

  explicit ComplexPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(const Monomial& e, Complex c);
  int total_degree() const;
  /// Multiplies each term by x_var^(degree - term degree).
  ComplexPoly homogenized(std::size_t var, int degree) const;

  Complex eval(const Eigen::VectorXcd& x) const;
  /// Value and gradient in one pass.
  Complex eval_with_gradient(const Eigen::VectorXcd& x, Eigen::Ref<Eigen::RowVectorXcd> gradient) const;

  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  ComplexPoly& operator+=(const ComplexPoly& other);

 private:
  std::size_t num_vars_;
  std::vector<Term> terms_;
};

/// Lines x2 = p x0 + q x1, x3 = r x0 + s x1: the four coefficients of f restricted
/// to the line through (1, 0, p, r) and (0, 1, q, s), as cubics in (p, q, r, s).
std::array<ComplexPoly, 4> line_system(const ComplexCubic& f);

struct TrackerConfig {
  int paths = 81;
  double initial_step = 0.05;
  double max_step = 0.1;
  double min_step = 1e-7;
  double track_tol = 1e-9;       // Newton step size accepted while tracking
  double corrector_tol = 1e-12;  // final polish at t = 1
  double divergence_norm = 1e8;
  double endgame_start = 0.1;  // 1 - t below which large affine norms count as divergence
  double dedup_tol = 1e-6;     // projective Plucker distance identifying duplicates
  double residual_tol = 1e-8;
  std::uint64_t seed = 1;
  std::optional<Complex> gamma;  // drawn from the seed when unset
  int max_attempts = 3;          // fresh chart and gamma per attempt
  unsigned threads = 0;          // 0: hardware concurrency

  /// Throws InvalidInput when a tolerance is not positive or a bound is out of range.
  void validate() const;
};

/// Line in P^3 with an orthonormal pair of spanning points and unit Plucker vector
/// (p01, p02, p03, p12, p13, p23), phase-normalized on its largest entry.
struct ComplexLine {
  CVec4 p;
  CVec4 q;
  CVec6 plucker;

  static ComplexLine through(const CVec4& a, const CVec4& b);
  double plucker_quadric_residual() const;
  /// sqrt(1 - |<l, m>|^2) between unit Plucker vectors.
  double distance(const ComplexLine& other) const;
};

enum class PathStatus { Finite, Diverged, Failed, Singular };
std::string to_string(PathStatus s);

struct PathReport {
  int index = 0;
  PathStatus status = PathStatus::Failed;
  double t_reached = 0.0;
  int steps = 0;
  double residual = 0.0;
  bool endgame_polished = false;  // stalled inside the endgame, then polished onto a root
};

struct TrackResult {
  std::vector<ComplexLine> lines;  // deterministic order
  std::vector<PathReport> paths;   // final attempt
  Complex gamma;
  int attempts = 0;
  double max_residual = 0.0;
};

/// All lines on f by total-degree homotopy (start system gamma (p^3 - 1, q^3 - 1,
/// r^3 - 1, s^3 - 1)) after a seeded random projective change of coordinates.
/// Throws TrackingFailure when the count is not 27 after max_attempts, and
/// SingularSurface when paths repeatedly end on singular Jacobians.
TrackResult track_all(const ComplexCubic& f, const TrackerConfig& cfg);

struct EckardtCluster {
  CVec4 point;  // unit-normalized
  std::vector<int> lines;
  double spread = 0.0;
  double surface_residual = 0.0;
};

struct EckardtNumeric {
  std::vector<EckardtCluster> clusters;  // clusters with >= 3 lines
  std::size_t intersecting_pairs = 0;
  std::vector<std::string> warnings;
};

/// Pairwise intersections (closest approach below tol) clustered by single linkage at radius tol.
EckardtNumeric eckardt_numeric(const std::vector<ComplexLine>& lines, const ComplexCubic& f, double tol);

/// sqrt(1 - |<x, y>|^2) for unit vectors.
double projective_distance(const CVec4& x, const CVec4& y);

struct CrossValidation {
  SylvesterPoint point;
  std::vector<PentVertex> exact{};
  TrackResult tracked{};
  EckardtNumeric numeric{};
  std::vector<bool> vertex_matched{};  // parallel to exact
  bool counts_equal = false;
  bool ok() const;
};

/// Exact vertex criterion against the numeric detector. Throws DegenerateForm
/// for degenerate forms.
CrossValidation cross_validate(const SylvesterPoint& s, const TrackerConfig& cfg, double tol);

}  // namespace eckardt
