#include "rotlab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "rotlab/error.hpp"

namespace rotlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::BadRational, "malformed rational '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::BadRational, "signed denominator in '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::BadRational, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Integer Rational::floor() const { return floor_div(q_.get_num(), q_.get_den()); }

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DomainError, "reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DomainError, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::bit_size() const {
  return std::max(rotlab::bit_size(q_.get_num()), rotlab::bit_size(q_.get_den()));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::size_t bit_size(const Integer& z) {
  return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace rotlab
