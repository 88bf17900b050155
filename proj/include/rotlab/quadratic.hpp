#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rotlab/rational.hpp"

namespace rotlab {

/// Writes n > 0 as f^2 * d with d square-free. Returns {f, d}.
std::pair<Integer, Integer> square_free_decompose(const Integer& n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// The real number (a + b*sqrt(d)) / c with d square-free, d >= 2, b != 0,
/// c > 0 and gcd(a, b, c) = 1. The canonical form is unique, so
/// structural equality is value equality.
class QuadraticIrrational {
 public:
  /// Canonicalizes an arbitrary (a + b*sqrt(n)) / c. Throws
  /// Error(DomainError) if the value is rational (b == 0, n a perfect
  /// square) or if c == 0 or n < 0.
  QuadraticIrrational(Integer a, Integer b, Integer c, Integer n);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  /// Exact sign of value - x.
  std::strong_ordering compare(const Rational& x) const;

  QuadraticIrrational operator-() const;
  QuadraticIrrational reciprocal() const;
  friend QuadraticIrrational operator+(const QuadraticIrrational& x, const Rational& y);
  friend QuadraticIrrational operator-(const Rational& y, const QuadraticIrrational& x);
  friend QuadraticIrrational operator*(const QuadraticIrrational& x, const Rational& y);

  double to_double() const;
  /// "(a+b*sqrt(d))/c", the CSV rendering.
  std::string to_string() const;

  friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

 private:
  Integer a_, b_, c_, d_;
};

inline bool operator<(const QuadraticIrrational& x, const Rational& y) { return x.compare(y) < 0; }
inline bool operator>(const QuadraticIrrational& x, const Rational& y) { return x.compare(y) > 0; }

}  // namespace rotlab
