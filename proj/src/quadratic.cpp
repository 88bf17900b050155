#include "rotlab/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rotlab/error.hpp"

namespace rotlab {

namespace {

constexpr unsigned long kTrialLimit = 1000;

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard's rho. n must be odd, composite and not a
// perfect power of a small prime (trial division has stripped those).
Integer pollard_brent(const Integer& n) {
  for (unsigned long seed = 1;; ++seed) {
    Integer y = seed + 1, c = seed, g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = x - ys;
        Integer ad = abs(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> half;
    factor_into(root, half);
    for (const auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  const Integer g = pollard_brent(n);
  factor_into(g, out);
  factor_into(Integer(n / g), out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "factorize needs n >= 1");
  std::map<Integer, unsigned> found;
  Integer rest = n;
  for (unsigned long p = 2; p <= kTrialLimit && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++found[Integer(p)];
    }
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

std::pair<Integer, Integer> square_free_decompose(const Integer& n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "square_free_decompose needs n >= 1");
  Integer f = 1, d = 1;
  for (const auto& [p, e] : factorize(n)) {
    for (unsigned i = 0; i < e / 2; ++i) f *= p;
    if (e % 2 == 1) d *= p;
  }
  return {f, d};
}

QuadraticIrrational::QuadraticIrrational(Integer a, Integer b, Integer c, Integer n)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_ == 0) throw Error(ErrorCode::DomainError, "quadratic irrational with zero denominator");
  if (n < 0) throw Error(ErrorCode::DomainError, "negative radicand");
  if (b_ == 0 || n == 0) throw Error(ErrorCode::DomainError, "value is rational");
  auto [f, d] = square_free_decompose(n);
  if (d == 1) throw Error(ErrorCode::DomainError, "radicand is a perfect square");
  b_ *= f;
  d_ = d;
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

std::strong_ordering QuadraticIrrational::compare(const Rational& x) const {
  // sign((a + b sqrt d)/c - p/q) = sign(X + Y sqrt d), X = a q - p c, Y = b q.
  const Integer X = a_ * x.den() - x.num() * c_;
  const Integer Y = b_ * x.den();
  const int sx = sgn(X), sy = sgn(Y);
  if (sx >= 0 && sy > 0) return std::strong_ordering::greater;
  if (sx <= 0 && sy < 0) return std::strong_ordering::less;
  // Opposite signs: compare X^2 against Y^2 d (never equal, d is not a square).
  const Integer lhs = X * X, rhs = Y * Y * d_;
  const bool x_dominates = lhs > rhs;
  const int s = x_dominates ? sx : sy;
  return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

QuadraticIrrational QuadraticIrrational::operator-() const {
  return QuadraticIrrational(-a_, -b_, c_, d_);
}

QuadraticIrrational QuadraticIrrational::reciprocal() const {
  // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
  const Integer den = a_ * a_ - b_ * b_ * d_;
  return QuadraticIrrational(c_ * a_, -c_ * b_, den, d_);
}

QuadraticIrrational operator+(const QuadraticIrrational& x, const Rational& y) {
  // (a + b sqrt d)/c + p/q = (a q + p c + b q sqrt d) / (c q)
  return QuadraticIrrational(x.a_ * y.den() + y.num() * x.c_, x.b_ * y.den(), x.c_ * y.den(),
                             x.d_);
}

QuadraticIrrational operator-(const Rational& y, const QuadraticIrrational& x) { return -x + y; }

QuadraticIrrational operator*(const QuadraticIrrational& x, const Rational& y) {
  if (y.is_zero()) throw Error(ErrorCode::DomainError, "product with zero is rational");
  return QuadraticIrrational(x.a_ * y.num(), x.b_ * y.num(), x.c_ * y.den(), x.d_);
}

double QuadraticIrrational::to_double() const {
  return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / c_.get_d();
}

std::string QuadraticIrrational::to_string() const {
  return "(" + a_.get_str() + (b_ < 0 ? "" : "+") + b_.get_str() + "*sqrt(" + d_.get_str() +
         "))/" + c_.get_str();
}

}  // namespace rotlab
