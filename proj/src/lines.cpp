#include "eckardt/lines.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "eckardt/errors.hpp"
#include "eckardt/rng.hpp"

namespace eckardt {

namespace {

using Vec5 = Eigen::Matrix<Complex, 5, 1>;
using Mat5 = Eigen::Matrix<Complex, 5, 5>;

ComplexPoly constant_poly(std::size_t n, Complex c) {
  ComplexPoly p(n);
  p.add_term({}, c);
  return p;
}

ComplexPoly variable_poly(std::size_t n, std::size_t i) {
  ComplexPoly p(n);
  ComplexPoly::Monomial e{};
  e[i] = 1;
  p.add_term(e, 1.0);
  return p;
}

// Binary form in (u, v) with polynomial coefficients: entry k multiplies u^{d-k} v^k.
using BinaryForm = std::vector<ComplexPoly>;

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b, std::size_t n) {
  BinaryForm out(a.size() + b.size() - 1, ComplexPoly(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Restriction of f to u * first + v * second, with the linear forms given per coordinate.
BinaryForm restrict_cubic(const ComplexCubic& f, const std::array<BinaryForm, 4>& coords, std::size_t n) {
  BinaryForm total(4, ComplexPoly(n));
  const auto& table = CubicForm3::monomials();
  for (std::size_t m = 0; m < CubicForm3::kNumMonomials; ++m) {
    if (f.coeffs[m] == Complex(0.0)) continue;
    BinaryForm prod{constant_poly(n, f.coeffs[m])};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::uint32_t k = 0; k < table[m][i]; ++k) prod = multiply(prod, coords[i], n);
    }
    for (std::size_t k = 0; k < 4; ++k) total[k] += prod[k];
  }
  return total;
}

// The four chart equations with unknowns (p, q, r, s) at variables offset..offset+3.
std::array<ComplexPoly, 4> chart_equations(const ComplexCubic& f, std::size_t offset) {
  const std::size_t n = offset + 4;
  const ComplexPoly one = constant_poly(n, 1.0);
  const ComplexPoly zero(n);
  const std::array<BinaryForm, 4> coords{
      BinaryForm{one, zero}, BinaryForm{zero, one},
      BinaryForm{variable_poly(n, offset + 0), variable_poly(n, offset + 1)},
      BinaryForm{variable_poly(n, offset + 2), variable_poly(n, offset + 3)}};
  BinaryForm r = restrict_cubic(f, coords, n);
  return {r[0], r[1], r[2], r[3]};
}

CVec4 unit_vector(const CVec4& x) { return x / x.norm(); }

// Homotopy (1 - t) gamma G + t F on (h, p, q, r, s) plus the affine patch c . X = 1.
struct Homotopy {
  std::array<ComplexPoly, 4> target;  // homogeneous cubics in X
  Complex gamma;
  Eigen::Matrix<Complex, 1, 5> patch;

  void eval(const Vec5& x, double t, Vec5& h, Mat5& jac, Vec5* ht) const {
    const Eigen::VectorXcd xv = x;
    Eigen::RowVectorXcd grad(5);
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex fk = target[k].eval_with_gradient(xv, grad);
      const std::size_t v = k + 1;
      const Complex gk = x(v) * x(v) * x(v) - x(0) * x(0) * x(0);
      Eigen::Matrix<Complex, 1, 5> ggrad = Eigen::Matrix<Complex, 1, 5>::Zero();
      ggrad(0) = -3.0 * x(0) * x(0);
      ggrad(static_cast<Eigen::Index>(v)) = 3.0 * x(v) * x(v);
      h(static_cast<Eigen::Index>(k)) = (1.0 - t) * gamma * gk + t * fk;
      jac.row(static_cast<Eigen::Index>(k)) = (1.0 - t) * gamma * ggrad + t * grad;
      if (ht) (*ht)(static_cast<Eigen::Index>(k)) = fk - gamma * gk;
    }
    h(4) = (patch * x)(0) - 1.0;
    jac.row(4) = patch;
    if (ht) (*ht)(4) = 0.0;
  }
};

struct PathOutcome {
  PathReport report;
  Vec5 x = Vec5::Zero();
};

double affine_norm(const Vec5& x) {
  const double h = std::abs(x(0));
  const double rest = x.tail<4>().norm();
  return h == 0.0 ? std::numeric_limits<double>::infinity() : rest / h;
}

// Newton at fixed t; true when the last step is below tol relative to |x|.
bool correct(const Homotopy& hom, Vec5& x, double t, double tol, int max_iters) {
  Vec5 h;
  Mat5 jac;
  for (int it = 0; it < max_iters; ++it) {
    hom.eval(x, t, h, jac, nullptr);
    const Vec5 dx = jac.partialPivLu().solve(-h);
    if (!dx.allFinite()) return false;
    x += dx;
    if (dx.norm() <= tol * (1.0 + x.norm())) return true;
  }
  return false;
}

PathOutcome track_path(const Homotopy& hom, const Vec5& start, int index, const TrackerConfig& cfg) {
  PathOutcome out;
  out.report.index = index;
  Vec5 x = start;
  double t = 0.0;
  double step = cfg.initial_step;
  int successes = 0;
  Vec5 h;
  Vec5 ht;
  Mat5 jac;
  while (t < 1.0) {
    const double dt = std::min(step, 1.0 - t);
    hom.eval(x, t, h, jac, &ht);
    const Vec5 velocity = jac.partialPivLu().solve(-ht);
    Vec5 next = x + dt * velocity;
    const double t_next = (1.0 - t - dt) < 1e-15 ? 1.0 : t + dt;
    const bool ok = velocity.allFinite() && correct(hom, next, t_next, cfg.track_tol, 3);
    ++out.report.steps;
    if (ok) {
      x = next;
      t = t_next;
      if (++successes >= 3) {
        step = std::min(2.0 * step, cfg.max_step);
        successes = 0;
      }
      if (1.0 - t < cfg.endgame_start && affine_norm(x) > cfg.divergence_norm) {
        out.report.status = PathStatus::Diverged;
        break;
      }
    } else {
      step *= 0.5;
      successes = 0;
      if (step < cfg.min_step) {
        out.report.status = affine_norm(x) > cfg.divergence_norm ? PathStatus::Diverged : PathStatus::Failed;
        break;
      }
    }
  }
  out.report.t_reached = t;
  out.x = x;
  if (t >= 1.0) out.report.status = affine_norm(x) > cfg.divergence_norm ? PathStatus::Diverged : PathStatus::Finite;
  return out;
}

struct Polish {
  bool converged = false;
  double rcond = 0.0;     // singular-value ratio of the Jacobian at the best iterate
  double residual = 0.0;  // smallest max-norm of the system seen
};

// Newton polish on the affine chart system. When Newton fails to converge the
// best iterate is still reported, so singular endpoints can be told apart.
Polish polish(const std::array<ComplexPoly, 4>& eqs, Eigen::Vector4cd& y, double tol) {
  Eigen::VectorXcd yv(4);
  Eigen::RowVectorXcd grad(4);
  Eigen::Matrix4cd jac;
  Eigen::Vector4cd val;
  Polish out;
  out.residual = std::numeric_limits<double>::infinity();
  Eigen::Matrix4cd best_jac = Eigen::Matrix4cd::Zero();
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 40; ++it) {
    yv = y;
    for (Eigen::Index k = 0; k < 4; ++k) {
      val(k) = eqs[static_cast<std::size_t>(k)].eval_with_gradient(yv, grad);
      jac.row(k) = grad;
    }
    if (val.cwiseAbs().maxCoeff() < out.residual) {
      out.residual = val.cwiseAbs().maxCoeff();
      best_jac = jac;
    }
    const Eigen::Vector4cd dy = jac.partialPivLu().solve(-val);
    if (!dy.allFinite()) break;
    y += dy;
    const double step = dy.norm();
    const double scale = 1.0 + y.norm();
    // An ill-conditioned root stalls at the rounding floor before reaching tol.
    if (step <= tol * scale || (step >= previous && step <= 1e-6 * scale)) {
      out.converged = true;
      best_jac = jac;
      break;
    }
    previous = step;
  }
  if (!best_jac.allFinite()) return out;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(best_jac);
  const auto& sv = svd.singularValues();
  out.rcond = sv(0) > 0.0 ? sv(3) / sv(0) : 0.0;
  return out;
}

}  // namespace

ComplexCubic ComplexCubic::from(const CubicForm3& f) {
  ComplexCubic out;
  for (std::size_t k = 0; k < CubicForm3::kNumMonomials; ++k) out.coeffs[k] = f.coeffs()[k].to_double();
  return out;
}

Complex ComplexCubic::eval(const CVec4& x) const {
  const auto& table = CubicForm3::monomials();
  Complex sum = 0.0;
  for (std::size_t m = 0; m < CubicForm3::kNumMonomials; ++m) {
    Complex term = coeffs[m];
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (std::uint32_t k = 0; k < table[m][static_cast<std::size_t>(i)]; ++k) term *= x(i);
    }
    sum += term;
  }
  return sum;
}

ComplexCubic ComplexCubic::transformed(const Eigen::Matrix4cd& m) const {
  // x_i = sum_j m(i, j) y_j as linear polynomials in y.
  std::array<ComplexPoly, 4> x;
  for (std::size_t i = 0; i < 4; ++i) {
    x[i] = ComplexPoly(4);
    for (std::size_t j = 0; j < 4; ++j) {
      ComplexPoly::Monomial e{};
      e[j] = 1;
      x[i].add_term(e, m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
  ComplexPoly total(4);
  const auto& table = CubicForm3::monomials();
  for (std::size_t k = 0; k < CubicForm3::kNumMonomials; ++k) {
    if (coeffs[k] == Complex(0.0)) continue;
    ComplexPoly prod = constant_poly(4, coeffs[k]);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::uint32_t e = 0; e < table[k][i]; ++e) prod = prod * x[i];
    }
    total += prod;
  }
  ComplexCubic out;
  for (const auto& term : total.terms()) {
    const auto& e = term.exponents;
    out.coeffs[CubicForm3::index_of({e[0], e[1], e[2], e[3]})] += term.coeff;
  }
  return out;
}

double ComplexCubic::max_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

ComplexCubic ComplexCubic::normalized() const {
  ComplexCubic out = *this;
  const double m = max_norm();
  if (m > 0.0) {
    for (auto& c : out.coeffs) c /= m;
  }
  return out;
}

std::array<Complex, 4> ComplexCubic::restrict_to_line(const CVec4& p, const CVec4& q) const {
  std::array<BinaryForm, 4> coords;
  for (std::size_t i = 0; i < 4; ++i) {
    coords[i] = BinaryForm{constant_poly(0, p(static_cast<Eigen::Index>(i))),
                           constant_poly(0, q(static_cast<Eigen::Index>(i)))};
  }
  const BinaryForm r = restrict_cubic(*this, coords, 0);
  std::array<Complex, 4> out{};
  const Eigen::VectorXcd none(0);
  for (std::size_t k = 0; k < 4; ++k) out[k] = r[k].eval(none);
  return out;
}

void ComplexPoly::add_term(const Monomial& e, Complex c) {
  if (c == Complex(0.0)) return;
  for (auto& t : terms_) {
    if (t.exponents == e) {
      t.coeff += c;
      return;
    }
  }
  terms_.push_back({e, c});
}

int ComplexPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto v : t.exponents) s += v;
    d = std::max(d, s);
  }
  return d;
}

ComplexPoly ComplexPoly::homogenized(std::size_t var, int degree) const {
  ComplexPoly out(num_vars_);
  for (auto t : terms_) {
    int s = 0;
    for (auto v : t.exponents) s += v;
    if (s > degree) throw InvalidInput("homogenizing degree below the polynomial degree");
    t.exponents[var] = static_cast<std::uint8_t>(t.exponents[var] + degree - s);
    out.add_term(t.exponents, t.coeff);
  }
  return out;
}

Complex ComplexPoly::eval(const Eigen::VectorXcd& x) const {
  Eigen::RowVectorXcd g(static_cast<Eigen::Index>(num_vars_));
  return eval_with_gradient(x, g);
}

Complex ComplexPoly::eval_with_gradient(const Eigen::VectorXcd& x, Eigen::Ref<Eigen::RowVectorXcd> gradient) const {
  gradient.setZero();
  Complex value = 0.0;
  // Powers up to 3 cover every cubic system built here; higher degrees fall back to std::pow.
  std::array<std::array<Complex, 4>, 5> pw{};
  for (std::size_t i = 0; i < num_vars_; ++i) {
    pw[i][0] = 1.0;
    for (std::size_t k = 1; k < 4; ++k) pw[i][k] = pw[i][k - 1] * x(static_cast<Eigen::Index>(i));
  }
  auto power = [&](std::size_t i, unsigned k) {
    return k < 4 ? pw[i][k] : std::pow(x(static_cast<Eigen::Index>(i)), static_cast<int>(k));
  };
  for (const auto& t : terms_) {
    Complex mono = t.coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) mono *= power(i, t.exponents[i]);
    value += mono;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (t.exponents[v] == 0) continue;
      Complex d = t.coeff * static_cast<double>(t.exponents[v]);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        d *= power(i, i == v ? t.exponents[i] - 1U : t.exponents[i]);
      }
      gradient(static_cast<Eigen::Index>(v)) += d;
    }
  }
  return value;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly out(a.num_vars_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      ComplexPoly::Monomial e{};
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ta.exponents[i] + tb.exponents[i]);
      out.add_term(e, ta.coeff * tb.coeff);
    }
  }
  return out;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& other) {
  for (const auto& t : other.terms_) add_term(t.exponents, t.coeff);
  return *this;
}

std::array<ComplexPoly, 4> line_system(const ComplexCubic& f) { return chart_equations(f, 0); }

void TrackerConfig::validate() const {
  if (paths < 1 || paths > 81) throw InvalidInput("path count must be in 1..81");
  for (double v : {initial_step, max_step, min_step, track_tol, corrector_tol, divergence_norm, dedup_tol, residual_tol}) {
    if (!(v > 0.0)) throw InvalidInput("tracker tolerances and step bounds must be positive");
  }
  if (!(endgame_start > 0.0 && endgame_start < 1.0)) throw InvalidInput("endgame start must lie in (0, 1)");
  if (min_step > initial_step || initial_step > max_step) throw InvalidInput("need min_step <= initial_step <= max_step");
  if (max_attempts < 1) throw InvalidInput("max_attempts must be positive");
  if (gamma && std::abs(std::abs(*gamma) - 1.0) > 1e-12) throw InvalidInput("gamma must be a unit complex number");
}

ComplexLine ComplexLine::through(const CVec4& a, const CVec4& b) {
  ComplexLine line;
  line.p = unit_vector(a);
  CVec4 q = b - line.p.dot(b) * line.p;  // dot() conjugates its left argument
  if (q.norm() < 1e-14 * b.norm()) throw InvalidInput("line needs two distinct points");
  line.q = unit_vector(q);
  const std::array<std::pair<int, int>, 6> idx{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = idx[k];
    line.plucker(static_cast<Eigen::Index>(k)) = line.p(i) * line.q(j) - line.p(j) * line.q(i);
  }
  line.plucker /= line.plucker.norm();
  Eigen::Index big = 0;
  line.plucker.cwiseAbs().maxCoeff(&big);
  line.plucker *= std::conj(line.plucker(big)) / std::abs(line.plucker(big));
  return line;
}

double ComplexLine::plucker_quadric_residual() const {
  const auto& w = plucker;
  return std::abs(w(0) * w(5) - w(1) * w(4) + w(2) * w(3));
}

double ComplexLine::distance(const ComplexLine& other) const {
  const double overlap = std::abs(plucker.dot(other.plucker));
  return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Finite: return "finite";
    case PathStatus::Diverged: return "diverged";
    case PathStatus::Failed: return "failed";
    case PathStatus::Singular: return "singular";
  }
  return "?";
}

double projective_distance(const CVec4& x, const CVec4& y) {
  const double overlap = std::abs(x.dot(y)) / (x.norm() * y.norm());
  return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
}

TrackResult track_all(const ComplexCubic& f_in, const TrackerConfig& cfg) {
  cfg.validate();
  const ComplexCubic f = f_in.normalized();
  if (f.max_norm() == 0.0) throw InvalidInput("cubic form is identically zero");
  SeededRng rng(cfg.seed);
  std::ostringstream diagnostics;
  int singular_attempts = 0;

  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    Eigen::Matrix4cd chart;
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) chart(i, j) = rng.complex_in_box();
    }
    const Complex gamma = (attempt == 1 && cfg.gamma) ? *cfg.gamma : rng.unit_complex();
    Homotopy hom;
    hom.gamma = gamma;
    for (Eigen::Index i = 0; i < 5; ++i) hom.patch(i) = rng.complex_in_box();

    const ComplexCubic g = f.transformed(chart).normalized();
    const auto affine = chart_equations(g, 0);
    const auto lifted = chart_equations(g, 1);
    for (std::size_t k = 0; k < 4; ++k) hom.target[k] = lifted[k].homogenized(0, 3);

    // Start points: (1, w^a, w^b, w^c, w^d) scaled onto the patch.
    std::vector<Vec5> starts;
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const std::array<Complex, 3> roots{1.0, w, w * w};
    for (int code = 0; code < 81; ++code) {
      Vec5 v;
      v(0) = 1.0;
      int c = code;
      for (Eigen::Index k = 1; k < 5; ++k, c /= 3) v(k) = roots[static_cast<std::size_t>(c % 3)];
      starts.push_back(v / (hom.patch * v)(0));
    }

    std::vector<PathOutcome> outcomes(static_cast<std::size_t>(cfg.paths));
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next++; i < cfg.paths; i = next++) {
        outcomes[static_cast<std::size_t>(i)] = track_path(hom, starts[static_cast<std::size_t>(i)], i, cfg);
      }
    };
    unsigned nthreads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(cfg.paths));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < nthreads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // Deterministic reduction in path-index order.
    TrackResult result;
    result.gamma = gamma;
    result.attempts = attempt;
    int singular = 0;
    for (auto& o : outcomes) {
      // Paths heading to infinity stall near t = 1 on singular endpoints at h = 0. A stall
      // inside the endgame is still polished: a regular root it reaches is a genuine line,
      // and dedup absorbs repeats.
      const bool stalled = o.report.status == PathStatus::Failed && o.report.t_reached > 1.0 - cfg.endgame_start;
      if (o.report.status != PathStatus::Finite && !stalled) {
        result.paths.push_back(o.report);
        continue;
      }
      Eigen::Vector4cd y = o.x.tail<4>() / o.x(0);
      const Polish pol = polish(affine, y, cfg.corrector_tol);
      // Newton creeps towards a singular root without converging; a near-zero
      // residual on a near-singular Jacobian marks one.
      const bool singular_end = pol.converged ? pol.rcond < 1e-10 : (pol.residual < 1e-8 && pol.rcond < 1e-6);
      if (!pol.converged && !singular_end) {
        result.paths.push_back(o.report);
        continue;
      }
      if (singular_end) {
        o.report.status = PathStatus::Singular;
        ++singular;
        result.paths.push_back(o.report);
        continue;
      }
      o.report.endgame_polished = stalled;
      // Chart points (1, 0, p, r), (0, 1, q, s) mapped back by x = chart * y.
      const CVec4 a = chart * CVec4(1.0, 0.0, y(0), y(2));
      const CVec4 b = chart * CVec4(0.0, 1.0, y(1), y(3));
      const ComplexLine line = ComplexLine::through(a, b);
      const auto coeffs = f.restrict_to_line(line.p, line.q);
      double residual = 0.0;
      for (const auto& c : coeffs) residual = std::max(residual, std::abs(c));
      o.report.residual = residual;
      result.paths.push_back(o.report);
      if (residual > cfg.residual_tol) continue;
      const bool duplicate = std::any_of(result.lines.begin(), result.lines.end(),
                                         [&](const ComplexLine& l) { return l.distance(line) < cfg.dedup_tol; });
      if (!duplicate) {
        result.lines.push_back(line);
        result.max_residual = std::max(result.max_residual, residual);
      }
    }
    if (result.lines.size() == 27) return result;

    if (singular >= 2) ++singular_attempts;
    std::map<std::string, int> tally;
    for (const auto& p : result.paths) ++tally[to_string(p.status)];
    diagnostics << "attempt " << attempt << ": " << result.lines.size() << " distinct lines;";
    for (const auto& [k, v] : tally) diagnostics << " " << k << "=" << v;
    diagnostics << "\n";
  }
  if (singular_attempts == cfg.max_attempts) {
    throw SingularSurface("surface may be singular: paths end on singular Jacobians\n" + diagnostics.str());
  }
  throw TrackingFailure("tracking failure: expected 27 lines\n" + diagnostics.str());
}

EckardtNumeric eckardt_numeric(const std::vector<ComplexLine>& lines, const ComplexCubic& f_in, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("clustering tolerance must be positive");
  const ComplexCubic f = f_in.normalized();
  EckardtNumeric out;

  struct Meet {
    CVec4 point;
    int a;
    int b;
  };
  std::vector<Meet> meets;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      Eigen::Matrix4cd m;
      m << lines[a].p, lines[a].q, lines[b].p, lines[b].q;
      Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullV);
      if (svd.singularValues()(3) >= tol) continue;
      const CVec4 n = svd.matrixV().col(3);
      meets.push_back({unit_vector(n(0) * lines[a].p + n(1) * lines[a].q), static_cast<int>(a), static_cast<int>(b)});
    }
  }
  out.intersecting_pairs = meets.size();

  // Single-linkage clustering via union-find.
  std::vector<std::size_t> parent(meets.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < meets.size(); ++i) {
    for (std::size_t j = i + 1; j < meets.size(); ++j) {
      if (projective_distance(meets[i].point, meets[j].point) < tol) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < meets.size(); ++i) groups[find(i)].push_back(i);

  std::vector<std::vector<std::size_t>> ordered;
  for (auto& [root, members] : groups) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end());  // by first meet index: deterministic

  for (std::size_t g = 0; g < ordered.size(); ++g) {
    for (std::size_t h = g + 1; h < ordered.size(); ++h) {
      const double d = projective_distance(meets[ordered[g].front()].point, meets[ordered[h].front()].point);
      if (d < 10.0 * tol) {
        out.warnings.push_back("ill-conditioned clustering: two clusters " + std::to_string(d) + " apart");
      }
    }
  }

  for (const auto& members : ordered) {
    std::vector<int> incident;
    double spread = 0.0;
    for (std::size_t i : members) {
      incident.push_back(meets[i].a);
      incident.push_back(meets[i].b);
      for (std::size_t j : members) spread = std::max(spread, projective_distance(meets[i].point, meets[j].point));
    }
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
    if (incident.size() < 3) continue;
    if (incident.size() > 3) {
      out.warnings.push_back(std::to_string(incident.size()) + " lines through one point; a smooth cubic allows 3");
    }
    EckardtCluster c;
    c.point = meets[members.front()].point;
    c.lines = std::move(incident);
    c.spread = spread;
    c.surface_residual = std::abs(f.eval(c.point));
    out.clusters.push_back(std::move(c));
  }
  return out;
}

bool CrossValidation::ok() const {
  return counts_equal && std::all_of(vertex_matched.begin(), vertex_matched.end(), [](bool b) { return b; });
}

CrossValidation cross_validate(const SylvesterPoint& s, const TrackerConfig& cfg, double tol) {
  CrossValidation cv{.point = s};
  cv.exact = eckardt_vertices(s);
  const ComplexCubic f = ComplexCubic::from(to_cubic_p3(s));
  cv.tracked = track_all(f, cfg);
  cv.numeric = eckardt_numeric(cv.tracked.lines, f, tol);
  cv.counts_equal = cv.numeric.clusters.size() == cv.exact.size();
  for (const auto& v : cv.exact) {
    const P3Point x = v.p3();
    const CVec4 target(x[0].to_double(), x[1].to_double(), x[2].to_double(), x[3].to_double());
    cv.vertex_matched.push_back(std::any_of(cv.numeric.clusters.begin(), cv.numeric.clusters.end(),
                                            [&](const EckardtCluster& c) { return projective_distance(c.point, target) < tol; }));
  }
  return cv;
}

}  // namespace eckardt
