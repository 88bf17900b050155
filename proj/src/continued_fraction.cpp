#include "rotlab/continued_fraction.hpp"

#include <algorithm>
#include <utility>

#include "rotlab/error.hpp"

namespace rotlab {

namespace {

void require_positive_terms(std::span<const Integer> terms) {
  for (const auto& t : terms) {
    if (t < 1) throw Error(ErrorCode::DomainError, "partial quotients must be >= 1");
  }
}

std::size_t primitive_length(std::span<const Integer> word) {
  const std::size_t n = word.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = word[i] == word[i - p];
    if (repeats) return p;
  }
  return n;
}

}  // namespace

ContinuedFraction ContinuedFraction::finite(std::vector<Integer> terms) {
  require_positive_terms(terms);
  if (terms.size() >= 2 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  ContinuedFraction cf;
  cf.preperiod_ = std::move(terms);
  return cf;
}

ContinuedFraction ContinuedFraction::periodic(std::vector<Integer> preperiod,
                                              std::vector<Integer> period) {
  if (period.empty()) throw Error(ErrorCode::DomainError, "empty period");
  require_positive_terms(preperiod);
  require_positive_terms(period);
  period.resize(primitive_length(period));
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  ContinuedFraction cf;
  cf.preperiod_ = std::move(preperiod);
  cf.period_ = std::move(period);
  return cf;
}

Rational MoebiusTransform::apply(const Rational& x) const {
  return (Rational(a) * x + Rational(b)) / (Rational(c) * x + Rational(d));
}

MoebiusTransform operator*(const MoebiusTransform& l, const MoebiusTransform& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
          l.c * r.b + l.d * r.d};
}

ContinuedFraction rational_cf(const Rational& x) {
  if (x < Rational(0) || x >= Rational(1)) {
    throw Error(ErrorCode::DomainError, "rational_cf needs 0 <= x < 1, got " + x.to_string());
  }
  std::vector<Integer> terms;
  Integer p = x.num(), q = x.den();
  // x = p/q; the next term is floor(q/p).
  while (p != 0) {
    Integer t, rem;
    mpz_fdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    terms.push_back(t);
    q = p;
    p = rem;
  }
  return ContinuedFraction::finite(std::move(terms));
}

MoebiusTransform period_matrix(std::span<const Integer> period) {
  if (period.empty()) throw Error(ErrorCode::DomainError, "empty period");
  require_positive_terms(period);
  MoebiusTransform m;
  for (const auto& t : period) m = m * MoebiusTransform{0, 1, 1, t};
  return m;
}

QuadraticIrrational solve_periodic(std::span<const Integer> period) {
  const MoebiusTransform m = period_matrix(period);
  // x = (A x + B)/(C x + D)  <=>  C x^2 + (D - A) x - B = 0
  const Integer lin = m.d - m.a;
  const Integer disc = lin * lin + 4 * m.b * m.c;
  const Integer two_c = 2 * m.c;
  std::vector<QuadraticIrrational> inside;
  for (int s : {1, -1}) {
    QuadraticIrrational root(-lin, Integer(s), two_c, disc);
    if (root > Rational(0) && root < Rational(1)) inside.push_back(root);
  }
  internal_check(inside.size() == 1, "periodic fixed-point equation must have one root in (0,1)");
  return inside.front();
}

ExactValue backsubstitute(const Integer& m, const ExactValue& x) {
  if (m < 1) throw Error(ErrorCode::DomainError, "backsubstitute needs m >= 1");
  return std::visit(
      [&](const auto& v) -> ExactValue {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return (Rational(m) + v).reciprocal();
        } else {
          return (v + Rational(m)).reciprocal();
        }
      },
      x);
}

ExactValue cf_value(const ContinuedFraction& cf) {
  ExactValue x = Rational(0);
  if (!cf.is_finite()) x = solve_periodic(cf.period());
  const auto& pre = cf.preperiod();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) x = backsubstitute(*it, x);
  return x;
}

std::vector<Integer> minimal_rotation(std::span<const Integer> word) {
  std::vector<Integer> best(word.begin(), word.end());
  std::vector<Integer> cur = best;
  for (std::size_t i = 1; i < word.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace rotlab
