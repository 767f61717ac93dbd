#include "eckardt/arith/rat.hpp"

#include <cctype>
#include <string>

#include "eckardt/errors.hpp"

namespace eckardt {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw InvalidInput("rational with zero denominator: '" + std::string(text) + "'");
  return Rat(mpq_class(parse_integer(num), d));
}

std::string Rat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  // Powers of a reduced fraction stay reduced.
  mpq_class out;
  out.get_num() = num;
  out.get_den() = den;
  Rat r;
  r.value_ = std::move(out);
  return r;
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  return Rat(mpq_class(1 / value_));
}

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw InvalidInput("division by zero");
  value_ /= other.value_;
  return *this;
}

}  // namespace eckardt
