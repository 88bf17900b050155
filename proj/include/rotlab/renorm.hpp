#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rotlab/continued_fraction.hpp"
#include "rotlab/pl_map.hpp"
#include "rotlab/quadratic.hpp"
#include "rotlab/rational.hpp"

namespace rotlab {

struct RenormBudget {
  /// Renormalization steps before giving up.
  std::size_t max_stages = 1000;
  /// Backward orbit steps (points or propagated segments) per stage.
  std::uint64_t orbit_budget = 10'000'000;
  /// Largest bit size of map data allowed before a stage is attempted.
  std::size_t max_bits = 65536;
};

/// One renormalization step of a fixed-point-free map f.
///
/// With r = f(0), every t in [0, r) returns to [0, r) under f^{-1} after
/// m steps when t < s and after m + 1 steps when s <= t < r, where
/// s = f^m(r). `return_map` is the induced bijection of [0, r) (pieces with
/// values in [0, r)); `fstar` is that map rescaled to [0, 1).
struct ReturnData {
  Rational r;
  std::uint64_t m = 0;
  Rational s;
  std::vector<Piece> return_map;
  PLCircleMap fstar = PLCircleMap::identity();
  std::uint64_t applications = 0;
};

/// Minimal m > 0 with f^{-m}(0) in [0, f(0)).
std::uint64_t return_time_zero(const PLCircleMap& f, std::uint64_t budget);

ReturnData first_return(const PLCircleMap& f, std::uint64_t budget);

/// f* (identity when f has a fixed point).
PLCircleMap renormalize(const PLCircleMap& f, std::uint64_t budget = RenormBudget{}.orbit_budget);

enum class TraceOutcome { Terminated, Cycle, BudgetExceeded };

/// The orbit g_0 = f, g_{k+1} = g_k* under renormalization.
///
/// `maps` holds g_0..g_K and `steps[k]` renormalizes g_k into g_{k+1}.
///  - Terminated: g_K has a fixed point and no earlier g_k does.
///  - Cycle: g_K equals g_{cycle_first} and all earlier maps are distinct.
///  - BudgetExceeded: g_K is fixed-point free but a budget stopped the run;
///    `budget_reason` names it.
struct RenormTrace {
  std::vector<PLCircleMap> maps;
  std::vector<ReturnData> steps;
  TraceOutcome outcome = TraceOutcome::BudgetExceeded;
  std::size_t cycle_first = 0;
  std::string budget_reason;

  std::vector<Integer> quotients() const;
  std::size_t stage_count() const { return maps.size(); }
  std::size_t cycle_length() const { return maps.size() - 1 - cycle_first; }
  std::size_t max_bits() const;
  /// Distinct slopes over all recorded maps (for cycles: the finite slope set
  /// of the cycle), ascending.
  std::vector<Rational> slope_set() const;
};

RenormTrace renorm_trace(const PLCircleMap& f, const RenormBudget& budget = {});

/// Period of the periodic points of the map renormalized by `prev`, given
/// that `gk` = prev.fstar has a fixed point.
std::uint64_t final_period(const ReturnData& prev, const PLCircleMap& gk);

struct Undetermined {
  /// Leading partial quotients that are known to be correct.
  std::vector<Integer> partial_cf;
  /// Rational interval containing the rotation number (mod 1).
  Rational lower;
  Rational upper;
  std::string reason;
};

using RotationNumber = std::variant<Rational, QuadraticIrrational, Undetermined>;

struct RotationResult {
  RotationNumber value;
  std::optional<ContinuedFraction> cf;
  RenormTrace trace;

  bool is_rational() const { return std::holds_alternative<Rational>(value); }
  bool is_quadratic() const { return std::holds_alternative<QuadraticIrrational>(value); }
  bool is_undetermined() const { return std::holds_alternative<Undetermined>(value); }
};

/// Iterations of the numeric estimator used to bracket undetermined results.
inline constexpr std::uint64_t kDefaultEstimateIterations = 10'000;

RotationResult rotation_number_exact(const PLCircleMap& f, const RenormBudget& budget = {});

struct RotationEstimate {
  /// F^n(0) / n for the normalized lift (F(0) in [0, 1)).
  Rational estimate;
  /// 1/n: |F^n(0)/n - rot| <= 1/n for the lift's translation number.
  Rational error_bound;
};

RotationEstimate rotation_number_estimate(const PLCircleMap& f, std::uint64_t n);

/// Distance between x and y on R/Z.
Rational circle_distance(const Rational& x, const Rational& y);

/// Double approximation of an exact value (undetermined: interval midpoint).
double approximate(const RotationNumber& value);

}  // namespace rotlab
