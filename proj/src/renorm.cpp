#include "rotlab/renorm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "propagation.hpp"
#include "rotlab/error.hpp"

namespace rotlab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

[[noreturn]] void budget_exceeded(const std::string& what) {
  throw Error(ErrorCode::BudgetExceeded, what);
}

}  // namespace

std::uint64_t return_time_zero(const PLCircleMap& f, std::uint64_t budget) {
  const Rational r = f.evaluate(kZero);
  internal_check(r.sign() > 0, "return_time_zero needs a map without fixed points");
  const PLCircleMap finv = inverse(f);
  Rational x = kZero;
  for (std::uint64_t m = 1; m <= budget; ++m) {
    x = finv.evaluate(x);
    if (x < r) return m;
  }
  budget_exceeded("return time of 0 exceeds " + std::to_string(budget) + " steps");
}

ReturnData first_return(const PLCircleMap& f, std::uint64_t budget) {
  if (has_fixed_point(f)) {
    throw Error(ErrorCode::DomainError, "first_return needs a map without fixed points");
  }
  ReturnData rd;
  rd.r = f.evaluate(kZero);
  rd.m = return_time_zero(f, budget);
  Rational s = rd.r;
  for (std::uint64_t i = 0; i < rd.m; ++i) s = f.evaluate(s);
  rd.s = s;
  internal_check(rd.s.sign() > 0 && rd.s <= rd.r, "split point must satisfy 0 < s <= r");

  const detail::Propagation prop =
      detail::propagate({detail::TrackedSegment{kZero, rd.r, kZero, kOne, 0}},
                        inverse(f).circle_pieces(), kZero, rd.r, 1, budget);
  rd.applications = prop.applications;
  const auto& retired = prop.retired;
  // Return times take only the values m on [0, s) and m + 1 on [s, r).
  for (const auto& seg : retired) {
    if (seg.steps == rd.m) {
      internal_check(seg.dom_hi <= rd.s, "return time m found beyond the split point");
    } else {
      internal_check(seg.steps == rd.m + 1, "return time outside {m, m+1}");
      internal_check(seg.dom_lo >= rd.s, "return time m+1 found before the split point");
    }
  }
  detail::check_image_tiling(retired, kZero, rd.r);

  for (const auto& seg : retired) {
    if (!rd.return_map.empty()) {
      const auto& last = rd.return_map.back();
      const Rational last_end = last.value + last.slope * (seg.dom_lo - last.left);
      if (last.slope == seg.slope && last_end == seg.img_lo) continue;
    }
    rd.return_map.push_back(Piece{seg.dom_lo, seg.slope, seg.img_lo});
  }
  std::vector<Piece> scaled;
  scaled.reserve(rd.return_map.size());
  for (const auto& p : rd.return_map) scaled.push_back(Piece{p.left / rd.r, p.slope, p.value / rd.r});
  rd.fstar = make_circle_map(scaled);
  return rd;
}

PLCircleMap renormalize(const PLCircleMap& f, std::uint64_t budget) {
  if (has_fixed_point(f)) return PLCircleMap::identity();
  return first_return(f, budget).fstar;
}

std::vector<Integer> RenormTrace::quotients() const {
  std::vector<Integer> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.emplace_back(static_cast<unsigned long>(s.m));
  return out;
}

std::size_t RenormTrace::max_bits() const {
  std::size_t bits = 0;
  for (const auto& g : maps) bits = std::max(bits, g.max_bits());
  return bits;
}

std::vector<Rational> RenormTrace::slope_set() const {
  std::set<Rational> slopes;
  const std::size_t first = outcome == TraceOutcome::Cycle ? cycle_first : 0;
  for (std::size_t k = first; k < maps.size(); ++k) {
    for (const auto& p : maps[k].pieces()) slopes.insert(p.slope);
  }
  return {slopes.begin(), slopes.end()};
}

RenormTrace renorm_trace(const PLCircleMap& f, const RenormBudget& budget) {
  RenormTrace trace;
  trace.maps.push_back(f);
  std::map<PLCircleMap, std::size_t> seen{{f, 0}};
  for (;;) {
    const PLCircleMap& g = trace.maps.back();
    const std::size_t k = trace.maps.size() - 1;
    if (has_fixed_point(g)) {
      trace.outcome = TraceOutcome::Terminated;
      return trace;
    }
    if (trace.steps.size() >= budget.max_stages) {
      trace.budget_reason = "max_stages";
      return trace;
    }
    if (g.max_bits() > budget.max_bits) {
      trace.budget_reason = "max_bits";
      return trace;
    }
    try {
      trace.steps.push_back(first_return(g, budget.orbit_budget));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      trace.budget_reason = "orbit_budget";
      return trace;
    }
    PLCircleMap next = trace.steps.back().fstar;
    const auto [it, inserted] = seen.emplace(next, k + 1);
    trace.maps.push_back(std::move(next));
    if (!inserted) {
      trace.outcome = TraceOutcome::Cycle;
      trace.cycle_first = it->second;
      return trace;
    }
  }
}

std::uint64_t final_period(const ReturnData& prev, const PLCircleMap& gk) {
  const auto components = fixed_points(gk);
  internal_check(!components.empty(), "final_period needs a map with a fixed point");
  std::optional<std::uint64_t> period;
  for (const auto& c : components) {
    const Rational t = prev.r * c.lo;
    const std::uint64_t p = t < prev.s ? prev.m : prev.m + 1;
    internal_check(!period || *period == p, "periodic points with different periods");
    period = p;
  }
  return *period;
}

RotationEstimate rotation_number_estimate(const PLCircleMap& f, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "estimator needs n >= 1");
  Rational x = kZero;
  for (std::uint64_t i = 0; i < n; ++i) x = f.evaluate_lift(x);
  const Rational count(Integer(static_cast<unsigned long>(n)));
  return {x / count, count.reciprocal()};
}

RotationResult rotation_number_exact(const PLCircleMap& f, const RenormBudget& budget) {
  RotationResult result;
  result.trace = renorm_trace(f, budget);
  const RenormTrace& trace = result.trace;
  std::vector<Integer> quotients = trace.quotients();
  switch (trace.outcome) {
    case TraceOutcome::Terminated: {
      if (trace.steps.empty()) {
        result.cf = ContinuedFraction::finite({});
        result.value = kZero;
        break;
      }
      const std::uint64_t p = final_period(trace.steps.back(), trace.maps.back());
      quotients.back() = Integer(static_cast<unsigned long>(p));
      result.cf = ContinuedFraction::finite(std::move(quotients));
      result.value = std::get<Rational>(cf_value(*result.cf));
      break;
    }
    case TraceOutcome::Cycle: {
      const auto split = quotients.begin() + static_cast<std::ptrdiff_t>(trace.cycle_first);
      result.cf = ContinuedFraction::periodic({quotients.begin(), split}, {split, quotients.end()});
      const ExactValue v = cf_value(*result.cf);
      internal_check(std::holds_alternative<QuadraticIrrational>(v),
                     "periodic expansion must be irrational");
      result.value = std::get<QuadraticIrrational>(v);
      break;
    }
    case TraceOutcome::BudgetExceeded: {
      const RotationEstimate est = rotation_number_estimate(f, kDefaultEstimateIterations);
      result.value = Undetermined{std::move(quotients), est.estimate - est.error_bound,
                                  est.estimate + est.error_bound, trace.budget_reason};
      break;
    }
  }
  return result;
}

Rational circle_distance(const Rational& x, const Rational& y) {
  const Rational d = (x - y).frac();
  return std::min(d, kOne - d);
}

double approximate(const RotationNumber& value) {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Undetermined>) {
          return ((v.lower + v.upper) / Rational(2)).to_double();
        } else {
          return v.to_double();
        }
      },
      value);
}

}  // namespace rotlab
