#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace eckardt {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rat(long numerator, long denominator);
  explicit Rat(mpq_class value);

  /// Parses "p", "-p" or "p/q" in base 10. Throws InvalidInput.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rat pow(unsigned exponent) const;
  Rat abs() const;
  Rat inverse() const;

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

}  // namespace eckardt
