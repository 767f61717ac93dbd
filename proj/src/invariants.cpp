#include "eckardt/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "eckardt/arith/symmetric.hpp"
#include "eckardt/errors.hpp"

namespace eckardt {

namespace {

Rat int_pow(const Rat& base, long exponent) {
  if (exponent >= 0) return base.pow(static_cast<unsigned>(exponent));
  return base.inverse().pow(static_cast<unsigned>(-exponent));
}

// (g, x, y) with a*x + b*y = g = gcd(a, b).
std::array<long, 3> extended_gcd(long a, long b) {
  if (b == 0) return {a, 1, 0};
  const auto [g, x, y] = extended_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

std::array<Rat, 5> salmon_from_sigmas(const std::array<Rat, 5>& s) {
  const Rat& s1 = s[0];
  const Rat& s2 = s[1];
  const Rat& s3 = s[2];
  const Rat& s4 = s[3];
  const Rat& s5 = s[4];
  return {s4 * s4 - Rat(4) * s3 * s5, s1 * s5.pow(3), s4 * s5.pow(4), s2 * s5.pow(6), s5.pow(8)};
}

// Lowest-order term of a univariate polynomial: (valuation, coefficient).
std::pair<unsigned, Rat> lowest_term(const MultiPoly& p) {
  const auto& [e, c] = *p.terms().begin();
  return {e[0], c};
}

}  // namespace

SylvesterPoint::SylvesterPoint(std::array<Rat, 5> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r.is_zero(); })) {
    throw InvalidInput("Sylvester coefficients must not all be zero");
  }
}

SylvesterPoint SylvesterPoint::parse(std::string_view csv) {
  std::vector<Rat> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    values.push_back(Rat::parse(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 5) {
    throw InvalidInput("expected 5 comma-separated coefficients, got " + std::to_string(values.size()));
  }
  return SylvesterPoint({values[0], values[1], values[2], values[3], values[4]});
}

std::size_t SylvesterPoint::zero_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r.is_zero(); }));
}

SylvesterPoint SylvesterPoint::scaled(const Rat& lambda) const {
  if (lambda.is_zero()) throw InvalidInput("projective scaling by zero");
  std::array<Rat, 5> out = coeffs_;
  for (auto& c : out) c *= lambda;
  return SylvesterPoint(out);
}

SylvesterPoint SylvesterPoint::permuted(const Permutation& pi) const { return SylvesterPoint(permute(coeffs_, pi)); }

std::string SylvesterPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 5; ++i) os << (i ? ":" : "") << coeffs_[i];
  os << ")";
  return os.str();
}

bool operator==(const SylvesterPoint& a, const SylvesterPoint& b) {
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

ModuliPoint::ModuliPoint(std::array<Rat, 5> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return r.is_zero(); })) {
    throw InvalidInput("weighted projective point must not be all zero");
  }
}

ModuliPoint q_point() { return ModuliPoint({1, 0, 0, 0, 0}); }

bool weighted_equal(const ModuliPoint& p, const ModuliPoint& q) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < 5; ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
    if (!p[i].is_zero()) support.push_back(i);
  }
  // Need lambda with lambda^{w_i} = r_i on the support. With d = gcd of the
  // support weights and a Bezout combination sum c_i w_i = d, the candidate
  // lambda^d is prod r_i^{c_i}; every r_i must then equal it to the w_i/d.
  std::vector<Rat> ratio;
  std::vector<long> bezout;
  long d = 0;
  for (std::size_t i : support) {
    ratio.push_back(q[i] / p[i]);
    const long w = kModuliWeights[i];
    if (d == 0) {
      d = w;
      bezout.push_back(1);
      continue;
    }
    const auto [g, x, y] = extended_gcd(d, w);
    for (auto& c : bezout) c *= x;
    bezout.push_back(y);
    d = g;
  }
  Rat mu(1);
  for (std::size_t k = 0; k < support.size(); ++k) mu *= int_pow(ratio[k], bezout[k]);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (ratio[k] != mu.pow(kModuliWeights[support[k]] / static_cast<unsigned>(d))) return false;
  }
  return true;
}

std::array<Rat, 5> sigma_values(const SylvesterPoint& s) { return elem_sym_values(std::span<const Rat, 5>(s.coeffs())); }

ModuliPoint sigma_point(const SylvesterPoint& s) { return ModuliPoint(sigma_values(s)); }

std::array<Rat, 5> salmon_values(const SylvesterPoint& s) { return salmon_from_sigmas(sigma_values(s)); }

ModuliPoint salmon_invariants(const SylvesterPoint& s) {
  auto values = salmon_values(s);
  if (std::all_of(values.begin(), values.end(), [](const Rat& r) { return r.is_zero(); })) {
    throw BaseLocusPoint("base-locus point: all Salmon invariants vanish at " + s.to_string());
  }
  return ModuliPoint(values);
}

const FactoredPoly& i100_polynomial() {
  static const FactoredPoly poly = [] {
    std::vector<Factor> factors;
    factors.push_back({elem_sym(5, 5), 18});
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        factors.push_back({MultiPoly::variable(5, j) - MultiPoly::variable(5, i), 1});
      }
    }
    return FactoredPoly(5, Rat(1), std::move(factors));
  }();
  return poly;
}

Rat i100(const SylvesterPoint& s) { return i100_polynomial().eval(s.coeffs()); }

ModuliPoint inverse_map(const ModuliPoint& inv) {
  const Rat& i8 = inv[0];
  const Rat& i16 = inv[1];
  const Rat& i24 = inv[2];
  const Rat& i32 = inv[3];
  const Rat& i40 = inv[4];
  if (i40.is_zero()) throw InverseUndefined("inverse undefined at Q: I40 = 0 is the base locus of the inverse map");
  return ModuliPoint({i16, i32, (i24 * i24 - i8 * i40) / Rat(4), i24 * i40, i40 * i40});
}

bool base_locus_forward(const SylvesterPoint& s) {
  const auto sig = sigma_values(s);
  return sig[3].is_zero() && sig[4].is_zero();
}

ModuliPoint moduli_limit(std::span<const MultiPoly, 5> family) {
  for (const auto& f : family) {
    if (f.num_vars() != 1) throw InvalidInput("family must be univariate in t");
  }
  std::array<MultiPoly, 5> sig;
  for (std::size_t k = 0; k < 5; ++k) sig[k] = elem_sym(k + 1, 5).substitute(family);
  const std::array<MultiPoly, 5> inv{
      sig[3] * sig[3] - Rat(4) * (sig[2] * sig[4]), sig[0] * sig[4].pow(3), sig[3] * sig[4].pow(4),
      sig[1] * sig[4].pow(6), sig[4].pow(8)};

  // Limit exponent r = min v_i / w_i; coordinate i survives iff v_i = r * w_i.
  long best_num = -1;
  long best_den = 1;
  for (std::size_t i = 0; i < 5; ++i) {
    if (inv[i].is_zero()) continue;
    const long v = lowest_term(inv[i]).first;
    const long w = kModuliWeights[i];
    if (best_num < 0 || v * best_den < best_num * w) {
      best_num = v;
      best_den = w;
    }
  }
  if (best_num < 0) throw BaseLocusPoint("family lies entirely in the base locus");
  std::array<Rat, 5> limit{0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < 5; ++i) {
    if (inv[i].is_zero()) continue;
    const auto [v, c] = lowest_term(inv[i]);
    if (static_cast<long>(v) * best_den == best_num * static_cast<long>(kModuliWeights[i])) limit[i] = c;
  }
  return ModuliPoint(limit);
}

}  // namespace eckardt
