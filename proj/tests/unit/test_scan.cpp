#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "rotlab/scan.hpp"

using namespace rotlab;
using namespace rotlab::scan;

namespace {

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

std::vector<Rational> brute_fractions(long max_den) {
  std::set<Rational> out;
  for (long q = 1; q <= max_den; ++q)
    for (long p = 1; p < q; ++p) out.insert(R(p, q));
  return {out.begin(), out.end()};
}

const RenormBudget kBudget{1000, 10'000'000, 65536};

}  // namespace

TEST_CASE("fraction enumeration") {
  CHECK(enumerate_fractions(3) == std::vector<Rational>{R(1, 3), R(1, 2), R(2, 3)});
  const auto five = enumerate_fractions(5);
  CHECK(five.size() == 9);
  CHECK(five.back() == R(4, 5));
  CHECK(enumerate_fractions(1).empty());
  CHECK(enumerate_fractions(1, false) == std::vector<Rational>{R(0)});
  for (long d = 1; d <= 30; ++d) CHECK(enumerate_fractions(static_cast<std::size_t>(d)) == brute_fractions(d));
  CHECK_THROWS(enumerate_fractions(0));
}

TEST_CASE("single grid points") {
  const ScanRecord rec = scan_point(R(2, 3), R(1, 5), kBudget);
  CHECK(rec.kind == "quadratic");
  CHECK(rec.value == "(0+1*sqrt(2))/2");
  CHECK(rec.cf_preperiod == std::vector<Integer>{1});
  CHECK(rec.cf_period == std::vector<Integer>{2});
  CHECK(rec.elapsed_ms == 0);

  const ScanRecord half = scan_point(R(1, 3), R(0), kBudget);
  CHECK(half.kind == "rational");
  CHECK(half.value == "1/2");
}

TEST_CASE("q = 2/7 has only rational records at small denominators") {
  ScanOptions opts;
  opts.q_values = std::vector<Rational>{R(2, 7)};
  opts.r_max_den = 50;
  const auto records = run_scan(opts);
  CHECK(records.size() == enumerate_fractions(50).size());
  for (const auto& rec : records) CHECK(rec.kind == "rational");
  const auto summary = summarize(records);
  REQUIRE(summary.size() == 1);
  CHECK_FALSE(summary[0].has_irrational);
  CHECK(summary[0].rational_count == records.size());
}

TEST_CASE("scans are sorted and independent of the job count") {
  ScanOptions opts;
  opts.q_values = std::vector<Rational>{R(2, 3), R(1, 2)};
  opts.r_max_den = 16;
  const auto serial = run_scan(opts);
  opts.jobs = 4;
  const auto parallel = run_scan(opts);
  CHECK(to_csv(serial) == to_csv(parallel));
  for (std::size_t i = 1; i < serial.size(); ++i) {
    const bool ordered = serial[i - 1].q < serial[i].q ||
                         (serial[i - 1].q == serial[i].q && serial[i - 1].r < serial[i].r);
    CHECK(ordered);
  }
  std::istringstream csv(to_csv(serial));
  std::string line;
  std::getline(csv, line);
  CHECK(line == kCsvHeader);
  std::size_t lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == serial.size());
}

TEST_CASE("summaries agree with a direct reduction") {
  ScanOptions opts;
  opts.q_values = std::vector<Rational>{R(1, 2), R(2, 3), R(3, 8)};
  opts.r_max_den = 20;
  const auto records = run_scan(opts);
  for (const auto& s : summarize(records)) {
    bool any = false;
    std::size_t count = 0;
    for (const auto& rec : records) {
      if (rec.q != s.q) continue;
      ++count;
      any = any || rec.kind == "quadratic";
      if (rec.kind == "quadratic") CHECK(s.period_parts.count(minimal_rotation(rec.cf_period)) == 1);
    }
    CHECK(s.has_irrational == any);
    CHECK(s.rational_count + s.quadratic_count + s.undetermined_count == count);
  }
}

TEST_CASE("job count from the environment") {
  ::setenv("ROTLAB_JOBS", "3", 1);
  CHECK(default_jobs() == 3);
  ::setenv("ROTLAB_JOBS", "zero", 1);
  CHECK(default_jobs() == 1);
  ::unsetenv("ROTLAB_JOBS");
  CHECK(default_jobs() == 1);
}
