#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rotlab {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator, backed by GMP.
///
/// Every constructor canonicalizes, so two Rationals compare equal exactly
/// when their numerators and denominators agree.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : q_(Integer(static_cast<long>(n))) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error(DomainError) when den == 0.
  Rational(const Integer& num, const Integer& den);

  explicit Rational(mpq_class q);

  /// Accepts "p/q", "-p/q" or "n"; surrounding whitespace is not allowed.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  /// x - floor(x), always in [0, 1).
  Rational frac() const;

  Rational reciprocal() const;

  /// Bit length of the larger of |numerator| and denominator.
  std::size_t bit_size() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::string to_string(const Integer& z);
std::size_t bit_size(const Integer& z);

/// Floor division for integers (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace rotlab
