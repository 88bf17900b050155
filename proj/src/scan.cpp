#include "rotlab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "rotlab/continued_fraction.hpp"
#include "rotlab/error.hpp"

namespace rotlab::scan {

namespace {

std::string join_terms(const std::vector<Integer>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ' ';
    out += terms[i].get_str();
  }
  return out;
}

}  // namespace

std::vector<Rational> enumerate_fractions(std::size_t max_den, bool open_unit) {
  if (max_den < 1) throw Error(ErrorCode::DomainError, "max_den must be >= 1");
  std::vector<Rational> out;
  if (!open_unit) out.emplace_back(0);
  for (std::size_t den = 2; den <= max_den; ++den) {
    for (std::size_t num = 1; num < den; ++num) {
      if (std::gcd(num, den) == 1) {
        out.emplace_back(Integer(static_cast<unsigned long>(num)),
                         Integer(static_cast<unsigned long>(den)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScanRecord scan_point(const Rational& q, const Rational& r, const RenormBudget& budget,
                      bool record_timing) {
  ScanRecord rec{q, r, "undetermined", "", {}, {}, 0, 0, 0, ""};
  const auto start = std::chrono::steady_clock::now();
  try {
    const RotationResult res = rotation_number_exact(family_fqr(q, r), budget);
    rec.stages = res.trace.stage_count();
    rec.max_bits = res.trace.max_bits();
    if (const auto* x = std::get_if<Rational>(&res.value)) {
      rec.kind = "rational";
      rec.value = x->to_string();
    } else if (const auto* y = std::get_if<QuadraticIrrational>(&res.value)) {
      rec.kind = "quadratic";
      rec.value = y->to_string();
    } else {
      rec.cf_preperiod = std::get<Undetermined>(res.value).partial_cf;
    }
    if (res.cf) {
      rec.cf_preperiod = res.cf->preperiod();
      rec.cf_period = res.cf->period();
    }
  } catch (const std::exception& e) {
    rec.kind = "undetermined";
    rec.error = e.what();
  }
  if (record_timing) {
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return rec;
}

std::vector<ScanRecord> run_scan(const ScanOptions& options) {
  const std::vector<Rational> qs =
      options.q_values ? *options.q_values : enumerate_fractions(options.q_max_den);
  const std::vector<Rational> rs = enumerate_fractions(options.r_max_den);
  std::vector<std::pair<Rational, Rational>> grid;
  grid.reserve(qs.size() * rs.size());
  for (const auto& q : qs) {
    for (const auto& r : rs) grid.emplace_back(q, r);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<ScanRecord> records(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      records[i] = scan_point(grid[i].first, grid[i].second, options.budget, options.record_timing);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return records;
}

std::vector<ScanSummary> summarize(const std::vector<ScanRecord>& records) {
  std::map<Rational, ScanSummary> by_q;
  for (const auto& rec : records) {
    auto& s = by_q.try_emplace(rec.q).first->second;
    s.q = rec.q;
    if (rec.kind == "rational") {
      ++s.rational_count;
      s.longest_rational_cf = std::max(s.longest_rational_cf, rec.cf_preperiod.size());
    } else if (rec.kind == "quadratic") {
      ++s.quadratic_count;
      s.has_irrational = true;
      s.period_parts.insert(minimal_rotation(rec.cf_period));
      s.longest_irrational_head = std::max(s.longest_irrational_head,
                                           rec.cf_preperiod.size() + rec.cf_period.size());
    } else {
      ++s.undetermined_count;
    }
  }
  std::vector<ScanSummary> out;
  for (auto& [q, s] : by_q) out.push_back(std::move(s));
  return out;
}

std::string to_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& rec : records) {
    out << rec.q.to_string() << ',' << rec.r.to_string() << ',' << rec.kind << ',' << rec.value
        << ',' << join_terms(rec.cf_preperiod) << ',' << join_terms(rec.cf_period) << ','
        << rec.stages << ',' << rec.max_bits << ',' << rec.elapsed_ms << '\n';
  }
  return out.str();
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ROTLAB_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace rotlab::scan
