#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "rotlab/quadratic.hpp"
#include "rotlab/rational.hpp"

namespace rotlab {

/// An exact value in [0, 1): a rational, or a quadratic irrational.
using ExactValue = std::variant<Rational, QuadraticIrrational>;

/// Continued fraction [0; a_1, a_2, ...] of a value in [0, 1). The leading
/// zero is implicit.
///
/// Finite expansions keep their terms in `preperiod` and leave `period`
/// empty; they never end in 1 unless the whole expansion is [1].
/// Eventually periodic expansions have a primitive period and the shortest
/// possible preperiod. The factories enforce both canonical forms, so
/// equality of ContinuedFraction objects is equality of values.
class ContinuedFraction {
 public:
  ContinuedFraction() = default;

  static ContinuedFraction finite(std::vector<Integer> terms);
  static ContinuedFraction periodic(std::vector<Integer> preperiod, std::vector<Integer> period);

  bool is_finite() const { return period_.empty(); }
  const std::vector<Integer>& preperiod() const { return preperiod_; }
  const std::vector<Integer>& period() const { return period_; }

  /// Number of partial quotients of a finite expansion, or of the preperiod
  /// plus one period for periodic ones.
  std::size_t term_count() const { return preperiod_.size() + period_.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Integer> preperiod_;
  std::vector<Integer> period_;
};

/// Integer 2x2 matrix acting as x -> (a x + b) / (c x + d).
struct MoebiusTransform {
  Integer a = 1, b = 0, c = 0, d = 1;

  Integer determinant() const { return a * d - b * c; }
  Rational apply(const Rational& x) const;

  friend MoebiusTransform operator*(const MoebiusTransform& l, const MoebiusTransform& r);
  friend bool operator==(const MoebiusTransform&, const MoebiusTransform&) = default;
};

/// Euclidean expansion of x in [0, 1).
ContinuedFraction rational_cf(const Rational& x);

/// Product of the step matrices (0,1;1,m) over the period; the first term
/// is the outermost application.
MoebiusTransform period_matrix(std::span<const Integer> period);

/// The purely periodic value [0; period, period, ...].
QuadraticIrrational solve_periodic(std::span<const Integer> period);

/// 1 / (m + x).
ExactValue backsubstitute(const Integer& m, const ExactValue& x);

ExactValue cf_value(const ContinuedFraction& cf);

/// Minimal rotation of a cyclic word (lexicographically least).
std::vector<Integer> minimal_rotation(std::span<const Integer> word);

}  // namespace rotlab
