#include "properties.hpp"

#include <optional>
#include <sstream>
#include <type_traits>
#include <variant>

#include "generators.hpp"
#include "rotlab/error.hpp"
#include "rotlab/fixtures.hpp"
#include "rotlab/interval_map.hpp"
#include "rotlab/renorm.hpp"

namespace rotlab::testing {

namespace {

constexpr std::size_t kMaxExamples = 3;
// Random maps are drawn until the slowest property is satisfied; this caps
// the number of draws per requested case.
constexpr std::size_t kDrawFactor = 20;

// Keeps random-map traces short: maps whose data outgrows this are skipped.
const RenormBudget kRandomBudget{200, 1'000'000, 4096};

std::string show(const ExactValue& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

std::string show_map(const PLCircleMap& f) {
  std::ostringstream out;
  out << "{";
  for (const auto& p : f.pieces())
    out << "(" << p.left.to_string() << "," << p.slope.to_string() << "," << p.value.to_string()
        << ")";
  out << "}";
  return out.str();
}

std::optional<ExactValue> exact_of(const RotationResult& res) {
  if (const auto* q = std::get_if<Rational>(&res.value)) return ExactValue(*q);
  if (const auto* x = std::get_if<QuadraticIrrational>(&res.value)) return ExactValue(*x);
  return std::nullopt;
}

ExactValue one_minus(const ExactValue& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return ExactValue((Rational(1) - *q).frac());
  return ExactValue(Rational(1) - std::get<QuadraticIrrational>(x));
}

Rational random_point(Rng& rng) { return unit_fraction(rng, 40); }

}  // namespace

void PropertyReport::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (examples.size() < kMaxExamples) examples.push_back(what);
}

std::string PropertyReport::summary() const {
  std::ostringstream out;
  out << name << ": " << cases << " cases, " << failures << " failures";
  for (const auto& e : examples) out << "\n    counterexample " << e;
  return out.str();
}

std::vector<Fixture> known_fixtures() {
  const QuadraticIrrational sqrt2_minus_1(-1, 1, 1, 2);
  return {
      {"identity", PLCircleMap::identity(), Rational(0)},
      {"rotation(1/3)", rotation(Rational(1, 3)), Rational(1, 3)},
      {"rotation(2/5)", rotation(Rational(2, 5)), Rational(2, 5)},
      {"f_{1/3,0}", family_fqr(Rational(1, 3), Rational(0)), Rational(1, 2)},
      {"theorem-main", fixtures::theorem_main(), sqrt2_minus_1},
      {"theorem-main*", fixtures::theorem_main_star(), sqrt2_minus_1},
      {"f_{2/3,1/5}", family_fqr(Rational(2, 3), Rational(1, 5)), QuadraticIrrational(0, 1, 2, 2)},
      {"f_{3/7,1/10}", family_fqr(Rational(3, 7), Rational(1, 10)),
       QuadraticIrrational(-1, 1, 2, 5)},
      {"f_{7/8,3/8}", family_fqr(Rational(7, 8), Rational(3, 8)),
       Rational(Integer("668882489207594075334619723191244632191899781818066714800164040622"),
                Integer("761960058189671511292372730373166431351657862332319255996727602151"))},
  };
}

bool within_circle(const ExactValue& x, const Rational& center, const Rational& radius) {
  for (int k = -1; k <= 1; ++k) {
    const Rational lo = center - radius + Rational(k);
    const Rational hi = center + radius + Rational(k);
    const bool inside = std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Rational>)
            return lo <= v && v <= hi;
          else
            return v.compare(lo) >= 0 && v.compare(hi) <= 0;
        },
        x);
    if (inside) return true;
  }
  return false;
}

std::size_t ceil_two_log2(const Integer& q) {
  const Integer sq = q * q;
  std::size_t k = 0;
  Integer p = 1;
  while (p < sq) {
    p *= 2;
    ++k;
  }
  return k;
}

std::vector<PropertyReport> map_algebra_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport round_trip{"inverse/compose round trips"};
  PropertyReport consistency{"evaluation consistency of compose and inverse"};
  PropertyReport lift{"lift law F(t+1) = F(t) + 1"};
  PropertyReport monotone{"lift monotonicity"};
  PropertyReport involution{"f_q is an involution"};
  PropertyReport interval{"interval map round trips"};

  for (std::size_t i = 0; i < cases; ++i) {
    const PLCircleMap f = random_circle_map(rng);
    const PLCircleMap g = random_circle_map(rng);
    const PLCircleMap finv = inverse(f);
    round_trip.check(inverse(finv) == f && compose(f, finv).is_identity() &&
                         compose(finv, f).is_identity(),
                     show_map(f));

    const Rational t = random_point(rng);
    const PLCircleMap fg = compose(f, g);
    consistency.check(fg.evaluate(t) == f.evaluate(g.evaluate(t)) &&
                          finv.evaluate(f.evaluate(t)) == t,
                      show_map(f) + " " + show_map(g) + " at " + t.to_string());

    const Rational x = t + Rational(static_cast<long>(uniform_int(rng, -3, 3)));
    lift.check(f.evaluate_lift(x + Rational(1)) == f.evaluate_lift(x) + Rational(1),
               show_map(f) + " at " + x.to_string());

    Rational u = random_point(rng);
    Rational w = random_point(rng);
    if (u == w) w = (w + Rational(1, 41)).frac();
    if (w < u) std::swap(u, w);
    monotone.check(f.evaluate_lift(u) < f.evaluate_lift(w),
                   show_map(f) + " at " + u.to_string() + " < " + w.to_string());

    const Rational q(Integer(static_cast<long>(uniform_int(rng, 1, 60))),
                     Integer(static_cast<long>(uniform_int(rng, 1, 20))));
    const PLCircleMap fq = family_fq(q);
    involution.check(compose(fq, fq).is_identity() && inverse(fq) == fq, q.to_string());

    const PLIntervalMap a = random_interval_map(rng);
    const PLIntervalMap b = random_interval_map(rng);
    const PLIntervalMap ainv = inverse(a);
    interval.check(inverse(ainv) == a && compose(a, ainv) == PLIntervalMap::identity() &&
                       compose(a, b).evaluate(t) == a.evaluate(b.evaluate(t)),
                   "interval maps at " + t.to_string());
  }
  return {round_trip, consistency, lift, monotone, involution, interval};
}

std::vector<PropertyReport> renorm_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport breaks{"|B(f*)| <= |B(f)| on fixed-point-free maps"};
  PropertyReport head{"CF head equals the return time of 0"};
  PropertyReport conj{"rotation number invariant under conjugation by rotation(1/7)"};
  PropertyReport certificate{"rational p/q with q <= 12 has a q-periodic point"};
  PropertyReport length{"rational trace length <= ceil(2 log2 q) + 1"};
  std::vector<PropertyReport*> all{&breaks, &head, &conj, &certificate, &length};

  const PLCircleMap rot7 = rotation(Rational(1, 7));
  const PLCircleMap rot7_inv = inverse(rot7);

  auto visit = [&](const PLCircleMap& f, const std::string& label) {
    const bool free = !has_fixed_point(f);
    if (free && breaks.cases < cases) {
      try {
        const PLCircleMap fs = renormalize(f, kRandomBudget.orbit_budget);
        breaks.check(breakpoints(fs).size() <= breakpoints(f).size(), label);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) breaks.check(false, label + ": " + e.what());
      }
    }
    const RotationResult res = rotation_number_exact(f, kRandomBudget);
    const auto value = exact_of(res);
    if (!value) return;

    const auto& cf = *res.cf;
    if (!cf.is_finite() || cf.preperiod().size() >= 2) {
      const Integer a1 = cf.preperiod().empty() ? cf.period().front() : cf.preperiod().front();
      head.check(a1 == Integer(static_cast<unsigned long>(return_time_zero(f, kRandomBudget.orbit_budget))),
                 label);
    }

    if (conj.cases < cases) {
      const RotationResult other = rotation_number_exact(compose(rot7, compose(f, rot7_inv)), kRandomBudget);
      if (const auto v2 = exact_of(other))
        conj.check(*v2 == *value, label + ": " + show(*value) + " vs " + show(*v2));
    }

    if (const auto* pq = std::get_if<Rational>(&res.value)) {
      const Integer q = pq->den();
      if (q <= 12) {
        const unsigned qn = static_cast<unsigned>(q.get_ui());
        bool ok = has_fixed_point(power(f, qn));
        for (unsigned k = 1; ok && k < qn; ++k) ok = !has_fixed_point(power(f, k));
        certificate.check(ok, label + " rot " + pq->to_string());
      }
      if (res.trace.outcome == TraceOutcome::Terminated)
        length.check(res.trace.stage_count() <= ceil_two_log2(q) + 1,
                     label + " rot " + pq->to_string() + " stages " +
                         std::to_string(res.trace.stage_count()));
    }
  };

  for (const auto& fx : known_fixtures()) visit(fx.map, fx.name);
  for (std::size_t draw = 0; draw < cases * kDrawFactor; ++draw) {
    bool done = true;
    for (const auto* r : all) done = done && r->cases >= cases;
    if (done) break;
    const PLCircleMap f = random_circle_map(rng);
    visit(f, show_map(f));
  }
  return {breaks, head, conj, certificate, length};
}

std::vector<PropertyReport> estimator_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport fixtures_bound{"estimator within 1/n on fixtures"};
  PropertyReport random_bound{"estimator within 1/n on random maps"};
  const std::vector<std::uint64_t> ns{100, 1000, 10000};

  for (const auto& fx : known_fixtures()) {
    for (const auto n : ns) {
      const RotationEstimate e = rotation_number_estimate(fx.map, n);
      fixtures_bound.check(within_circle(fx.rotation, e.estimate, e.error_bound),
                           fx.name + " n=" + std::to_string(n));
    }
  }
  for (std::size_t draw = 0; draw < cases * kDrawFactor && random_bound.cases < cases; ++draw) {
    const PLCircleMap f = random_circle_map(rng);
    const auto value = exact_of(rotation_number_exact(f, kRandomBudget));
    if (!value) continue;
    bool ok = true;
    for (const auto n : ns) {
      const RotationEstimate e = rotation_number_estimate(f, n);
      ok = ok && within_circle(*value, e.estimate, e.error_bound);
    }
    random_bound.check(ok, show_map(f) + " rot " + show(*value));
  }
  return {fixtures_bound, random_bound};
}

std::vector<PropertyReport> inverse_law_properties(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  PropertyReport law{"rot(f^-1) = 1 - rot(f) on irrational fixtures and their conjugates"};
  PropertyReport invariance{"conjugates of irrational fixtures keep their rotation number"};

  std::vector<Fixture> irrational;
  for (auto& fx : known_fixtures())
    if (std::holds_alternative<QuadraticIrrational>(fx.rotation)) irrational.push_back(fx);

  auto check_law = [&](const PLCircleMap& f, const ExactValue& x, const std::string& label) {
    const auto inv = exact_of(rotation_number_exact(inverse(f), kRandomBudget));
    if (inv) law.check(*inv == one_minus(x), label + ": got " + show(*inv));
  };

  for (const auto& fx : irrational) check_law(fx.map, fx.rotation, fx.name);
  for (std::size_t draw = 0; draw < cases * kDrawFactor; ++draw) {
    if (law.cases >= cases && invariance.cases >= cases) break;
    const Fixture& fx = irrational[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(irrational.size()) - 1))];
    const PLCircleMap h = random_circle_map(rng);
    const PLCircleMap f = compose(h, compose(fx.map, inverse(h)));
    const std::string label = fx.name + " conjugated by " + show_map(h);
    const auto value = exact_of(rotation_number_exact(f, kRandomBudget));
    if (!value) continue;
    invariance.check(*value == fx.rotation, label + ": got " + show(*value));
    check_law(f, fx.rotation, label);
  }
  return {law, invariance};
}

}  // namespace rotlab::testing
