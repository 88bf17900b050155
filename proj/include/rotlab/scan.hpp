#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rotlab/rational.hpp"
#include "rotlab/renorm.hpp"

namespace rotlab::scan {

/// Reduced fractions with denominator <= max_den, ascending. With
/// open_unit they lie in (0, 1); otherwise 0 is included as well.
std::vector<Rational> enumerate_fractions(std::size_t max_den, bool open_unit = true);

struct ScanRecord {
  Rational q;
  Rational r;
  std::string kind;  // "rational" | "quadratic" | "undetermined"
  /// "p/q", "(a+b*sqrt(d))/c", or empty for undetermined records.
  std::string value;
  /// For undetermined records the preperiod holds the verified leading quotients.
  std::vector<Integer> cf_preperiod;
  std::vector<Integer> cf_period;
  std::size_t stages = 0;
  std::size_t max_bits = 0;
  std::int64_t elapsed_ms = 0;
  /// Failure message when the point raised instead of producing a result.
  std::string error;
};

struct ScanOptions {
  std::size_t q_max_den = 9;
  std::size_t r_max_den = 60;
  /// When set, scan these q instead of all fractions up to q_max_den.
  std::optional<std::vector<Rational>> q_values;
  RenormBudget budget;
  unsigned jobs = 1;
  /// Wall-clock timings make output run-dependent; off by default so the
  /// CSV is byte-reproducible.
  bool record_timing = false;
};

ScanRecord scan_point(const Rational& q, const Rational& r, const RenormBudget& budget,
                      bool record_timing = false);

/// One record per grid point, sorted by (q, r) whatever the job count.
std::vector<ScanRecord> run_scan(const ScanOptions& options);

struct ScanSummary {
  Rational q;
  bool has_irrational = false;
  /// Periodic parts of quadratic records, each as its minimal cyclic rotation.
  std::set<std::vector<Integer>> period_parts;
  std::size_t rational_count = 0;
  std::size_t quadratic_count = 0;
  std::size_t undetermined_count = 0;
  /// Longest finite expansion seen, and longest preperiod+period of an irrational one.
  std::size_t longest_rational_cf = 0;
  std::size_t longest_irrational_head = 0;
};

std::vector<ScanSummary> summarize(const std::vector<ScanRecord>& records);

inline constexpr const char* kCsvHeader =
    "q,r,kind,value,cf_preperiod,cf_period,stages,max_bits,elapsed_ms";

/// Header plus one line per record; list columns are space-separated terms.
std::string to_csv(const std::vector<ScanRecord>& records);

/// Default job count: $ROTLAB_JOBS when set and positive, else 1.
unsigned default_jobs();

}  // namespace rotlab::scan
