#include "eckardt/arith/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eckardt/errors.hpp"

namespace eckardt {

std::uint32_t degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool GrLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db;
  // Equal degree: the vector with the larger leading exponent is the larger monomial.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rat& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw InvalidInput("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rat(1));
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Rat& c) {
  MultiPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rat> coeffs, const Rat& constant_term) {
  const std::size_t n = coeffs.size();
  MultiPoly p = constant(n, constant_term);
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

Rat MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

Rat MultiPoly::leading_coefficient() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }

void MultiPoly::add_term(const Exponents& exponents, const Rat& c) {
  if (exponents.size() != num_vars_) throw InvalidInput("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_) throw InvalidInput("polynomials over different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(num_vars_, Rat(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derive(std::size_t var) const {
  if (var >= num_vars_) throw InvalidInput("derivative variable out of range");
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * Rat(static_cast<long>(e[var])));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != num_vars_) throw InvalidInput("substitution map is not total");
  const std::size_t target_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images) {
    if (img.num_vars() != target_vars) throw InvalidInput("substitution images over different variable counts");
  }
  // powers[i][k] = images[i]^k, built lazily up to the degree actually used.
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, Rat(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      term = term * power_of(i, e[i]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

Rat MultiPoly::eval(std::span<const Rat> point) const {
  if (point.size() != num_vars_) throw InvalidInput("evaluation point has wrong length");
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < num_vars_ && !term.is_zero(); ++i) {
      if (e[i] != 0) term *= point[i].pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_const = degree_of(e) == 0;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (is_const || mag != Rat(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace eckardt
