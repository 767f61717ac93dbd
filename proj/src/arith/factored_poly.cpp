#include "eckardt/arith/factored_poly.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "eckardt/errors.hpp"

namespace eckardt {

namespace {
std::atomic<std::size_t> g_expansions{0};
}

FactoredPoly::FactoredPoly(std::size_t num_vars, const Rat& scalar, std::vector<Factor> factors)
    : num_vars_(num_vars), scalar_(scalar), factors_(std::move(factors)) {
  normalize();
}

FactoredPoly FactoredPoly::from_poly(const MultiPoly& p) {
  return FactoredPoly(p.num_vars(), Rat(1), {Factor{p, 1}});
}

void FactoredPoly::normalize() {
  std::vector<Factor> merged;
  for (auto& f : factors_) {
    if (f.base.num_vars() != num_vars_) throw InvalidInput("factor over a different variable count");
    if (f.exponent == 0) continue;
    if (f.base.is_zero()) {
      scalar_ = Rat(0);
      break;
    }
    if (f.base.is_constant()) {
      scalar_ *= f.base.constant_term().pow(f.exponent);
      continue;
    }
    const Rat lead = f.base.leading_coefficient();
    if (lead != Rat(1)) {
      scalar_ *= lead.pow(f.exponent);
      f.base *= lead.inverse();
    }
    auto same = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) { return g.base == f.base; });
    if (same != merged.end()) {
      same->exponent += f.exponent;
    } else {
      merged.push_back(std::move(f));
    }
  }
  if (scalar_.is_zero()) merged.clear();
  factors_ = std::move(merged);
}

int FactoredPoly::total_degree() const {
  if (is_zero()) return -1;
  int d = 0;
  for (const auto& f : factors_) d += static_cast<int>(f.exponent) * f.base.total_degree();
  return d;
}

Rat FactoredPoly::eval(std::span<const Rat> point) const {
  if (point.size() != num_vars_) throw InvalidInput("evaluation point has wrong length");
  Rat value = scalar_;
  for (const auto& f : factors_) {
    if (value.is_zero()) break;
    value *= f.base.eval(point).pow(f.exponent);
  }
  return value;
}

FactoredPoly FactoredPoly::substitute(std::span<const MultiPoly> images) const {
  const std::size_t target = images.empty() ? 0 : images.front().num_vars();
  std::vector<Factor> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back({f.base.substitute(images), f.exponent});
  return FactoredPoly(target, scalar_, std::move(out));
}

FactoredSum FactoredPoly::derive(std::size_t var) const {
  if (var >= num_vars_) throw InvalidInput("derivative variable out of range");
  std::vector<FactoredPoly> summands;
  if (is_zero()) return FactoredSum(num_vars_, {});
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    MultiPoly d = factors_[k].base.derive(var);
    if (d.is_zero()) continue;
    std::vector<Factor> fs = factors_;
    const unsigned e = fs[k].exponent;
    fs[k].exponent = e - 1;
    fs.push_back({std::move(d), 1});
    summands.emplace_back(num_vars_, scalar_ * Rat(static_cast<long>(e)), std::move(fs));
  }
  return FactoredSum(num_vars_, std::move(summands));
}

MultiPoly FactoredPoly::expand(int max_degree) const {
  ++g_expansions;
  if (total_degree() > max_degree) {
    throw InvalidInput("refusing to expand a product of degree " + std::to_string(total_degree()));
  }
  MultiPoly out = MultiPoly::constant(num_vars_, scalar_);
  for (const auto& f : factors_) out = out * f.base.pow(f.exponent);
  return out;
}

FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw InvalidInput("factored polynomials over different variable counts");
  std::vector<Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return FactoredPoly(a.num_vars_, a.scalar_ * b.scalar_, std::move(fs));
}

std::size_t FactoredPoly::expansion_count() { return g_expansions.load(); }

FactoredSum::FactoredSum(std::size_t num_vars, std::vector<FactoredPoly> summands)
    : num_vars_(num_vars), summands_(std::move(summands)) {
  for (const auto& s : summands_) {
    if (s.num_vars() != num_vars_) throw InvalidInput("summand over a different variable count");
  }
}

Rat FactoredSum::eval(std::span<const Rat> point) const {
  Rat sum(0);
  for (const auto& s : summands_) sum += s.eval(point);
  return sum;
}

FactoredSum FactoredSum::substitute(std::span<const MultiPoly> images) const {
  const std::size_t target = images.empty() ? 0 : images.front().num_vars();
  std::vector<FactoredPoly> out;
  out.reserve(summands_.size());
  for (const auto& s : summands_) out.push_back(s.substitute(images));
  return FactoredSum(target, std::move(out));
}

bool FactoredSum::is_identically_zero(int max_cofactor_degree) const {
  std::vector<const FactoredPoly*> live;
  for (const auto& s : summands_) {
    if (!s.is_zero()) live.push_back(&s);
  }
  if (live.empty()) return true;
  if (live.size() == 1) return false;

  // Common factor: each base present in every summand, at its minimum exponent.
  std::vector<Factor> common;
  for (const auto& f : live.front()->factors()) {
    unsigned e = f.exponent;
    for (const FactoredPoly* s : live) {
      auto it = std::find_if(s->factors().begin(), s->factors().end(),
                             [&](const Factor& g) { return g.base == f.base; });
      e = it == s->factors().end() ? 0 : std::min(e, it->exponent);
      if (e == 0) break;
    }
    if (e > 0) common.push_back({f.base, e});
  }

  MultiPoly total(num_vars_);
  for (const FactoredPoly* s : live) {
    std::vector<Factor> rest;
    for (const auto& f : s->factors()) {
      unsigned e = f.exponent;
      for (const auto& c : common) {
        if (c.base == f.base) e -= c.exponent;
      }
      if (e > 0) rest.push_back({f.base, e});
    }
    total += FactoredPoly(num_vars_, s->scalar(), std::move(rest)).expand(max_cofactor_degree);
  }
  return total.is_zero();
}

MultiPoly FactoredSum::expand(int max_degree) const {
  MultiPoly total(num_vars_);
  for (const auto& s : summands_) {
    if (!s.is_zero()) total += s.expand(max_degree);
  }
  return total;
}

}  // namespace eckardt
