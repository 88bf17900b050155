// rotlab: rotation numbers of PL circle homeomorphisms with rational data.
//
//   rotlab rot      --fixture theorem-main
//   rotlab trace    --family fqr --q 3/7 --r 1/10
//   rotlab estimate --family fqr --q 2/3 --r 1/5 --iters 1000
//   rotlab family   --family bosh --a 1/4 --b 1/2
//   rotlab obstruct --fixture paper-gh
//   rotlab scan     --q-max-den 9 --r-max-den 60 --jobs 8 --out scan.csv
//
// Exit status: 0 success, 2 invalid input, 3 budget exhausted (rot/trace).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotlab/error.hpp"
#include "rotlab/fixtures.hpp"
#include "rotlab/json_io.hpp"
#include "rotlab/obstruction.hpp"
#include "rotlab/renorm.hpp"
#include "rotlab/scan.hpp"

namespace {

using rotlab::Error;
using rotlab::ErrorCode;
using rotlab::PLCircleMap;
using rotlab::Rational;
using rotlab::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct MapSelection {
  std::string map_file;
  std::string family;
  std::string fixture;
  std::string q, r, a, b;
};

struct BudgetFlags {
  std::size_t max_stages = rotlab::RenormBudget{}.max_stages;
  std::uint64_t orbit_budget = rotlab::RenormBudget{}.orbit_budget;
  std::size_t max_bits = rotlab::RenormBudget{}.max_bits;

  rotlab::RenormBudget budget() const { return {max_stages, orbit_budget, max_bits}; }
};

Rational flag_rational(const std::string& flag, const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::BadInput, "missing required flag " + flag);
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::BadRational, "flag " + flag + ": " + e.what());
  }
}

void add_selection(CLI::App* cmd, MapSelection& sel) {
  cmd->add_option("--map", sel.map_file, "circle map JSON file");
  cmd->add_option("--family", sel.family, "map family")->check(CLI::IsMember({"fqr", "bosh"}));
  cmd->add_option("--fixture", sel.fixture, "built-in map")
      ->check(CLI::IsMember({"theorem-main", "paper-gh"}));
  cmd->add_option("--q", sel.q, "f_{q,r} slope parameter p/q");
  cmd->add_option("--r", sel.r, "f_{q,r} rotation parameter p/q");
  cmd->add_option("--a", sel.a, "phi_{a,b} parameter a");
  cmd->add_option("--b", sel.b, "phi_{a,b} parameter b");
}

void add_budgets(CLI::App* cmd, BudgetFlags& flags) {
  cmd->add_option("--max-stages", flags.max_stages, "renormalization steps before giving up");
  cmd->add_option("--orbit-budget", flags.orbit_budget, "backward orbit steps per stage");
  cmd->add_option("--max-bits", flags.max_bits, "bit-size cap on renormalized map data");
}

PLCircleMap select_map(const MapSelection& sel) {
  const int sources = !sel.map_file.empty() + !sel.family.empty() + !sel.fixture.empty();
  if (sources != 1) {
    throw Error(ErrorCode::BadInput, "give exactly one of --map, --family, --fixture");
  }
  if (!sel.map_file.empty()) {
    auto any = rotlab::io::read_map_file(sel.map_file);
    if (auto* f = std::get_if<PLCircleMap>(&any)) return *f;
    throw Error(ErrorCode::BadInput, "map file '" + sel.map_file + "' must have kind \"circle\"");
  }
  if (sel.fixture == "theorem-main") return rotlab::fixtures::theorem_main();
  if (sel.fixture == "paper-gh") {
    const rotlab::ObstructionInput input{rotlab::fixtures::obstruction_g(), rotlab::fixtures::obstruction_h(),
                                         rotlab::fixtures::obstruction_s()};
    return rotlab::gamma_map(input).rescaled;
  }
  if (sel.family == "fqr") {
    return rotlab::family_fqr(flag_rational("--q", sel.q),
                              sel.r.empty() ? Rational(0) : flag_rational("--r", sel.r));
  }
  return rotlab::family_boshernitzan(flag_rational("--a", sel.a), flag_rational("--b", sel.b)).map;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write --out file '" + out_path + "'");
  out << text;
}

std::vector<Rational> parse_q_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(flag_rational("--q", item));
  return out;
}

Json summary_json(const std::vector<rotlab::scan::ScanSummary>& summaries) {
  Json arr = Json::array();
  for (const auto& s : summaries) {
    Json parts = Json::array();
    for (const auto& p : s.period_parts) {
      Json word = Json::array();
      for (const auto& t : p) word.push_back(rotlab::io::integer_json(t));
      parts.push_back(std::move(word));
    }
    arr.push_back(Json{{"q", s.q.to_string()},
                       {"has_irrational", s.has_irrational},
                       {"rational", s.rational_count},
                       {"quadratic", s.quadratic_count},
                       {"undetermined", s.undetermined_count},
                       {"period_parts", std::move(parts)},
                       {"longest_rational_cf", s.longest_rational_cf},
                       {"longest_irrational_head", s.longest_irrational_head}});
  }
  return arr;
}

Json records_json(const std::vector<rotlab::scan::ScanRecord>& records) {
  Json arr = Json::array();
  auto terms = [](const std::vector<rotlab::Integer>& v) {
    Json a = Json::array();
    for (const auto& t : v) a.push_back(rotlab::io::integer_json(t));
    return a;
  };
  for (const auto& r : records) {
    Json rec{{"q", r.q.to_string()},          {"r", r.r.to_string()},
             {"kind", r.kind},                {"value", r.value},
             {"cf_preperiod", terms(r.cf_preperiod)}, {"cf_period", terms(r.cf_period)},
             {"stages", r.stages},            {"max_bits", r.max_bits},
             {"elapsed_ms", r.elapsed_ms}};
    if (!r.error.empty()) rec["error"] = r.error;
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rotation numbers of PL circle homeomorphisms"};
  app.require_subcommand(1);

  MapSelection sel;
  BudgetFlags budgets;
  std::string out_path;
  std::uint64_t iters = rotlab::kDefaultEstimateIterations;

  auto* rot = app.add_subcommand("rot", "exact rotation number");
  auto* trace = app.add_subcommand("trace", "renormalization trace and rotation number");
  auto* estimate = app.add_subcommand("estimate", "numeric estimate F^n(0)/n");
  auto* family = app.add_subcommand("family", "print a family member or fixture as a map file");
  for (auto* cmd : {rot, trace, estimate, family}) {
    add_selection(cmd, sel);
    cmd->add_option("--out", out_path, "write output to FILE");
  }
  for (auto* cmd : {rot, trace}) add_budgets(cmd, budgets);
  estimate->add_option("--iters", iters, "iterations n")->check(CLI::PositiveNumber);

  auto* obstruct = app.add_subcommand("obstruct", "F-obstruction check for a pair (g, h)");
  obstruct->set_help_flag("--help", "print help for obstruct");
  std::string g_file, h_file, s_text, ob_fixture;
  obstruct->add_option("--g", g_file, "interval map JSON file for g");
  obstruct->add_option("--h", h_file, "interval map JSON file for h");
  obstruct->add_option("--s", s_text, "seed point p/q");
  obstruct->add_option("--fixture", ob_fixture, "built-in pair")->check(CLI::IsMember({"paper-gh"}));
  obstruct->add_option("--out", out_path, "write output to FILE");
  add_budgets(obstruct, budgets);

  auto* scan_cmd = app.add_subcommand("scan", "sweep rot(f_{q,r}) over a fraction grid");
  rotlab::scan::ScanOptions scan_opts;
  scan_opts.jobs = rotlab::scan::default_jobs();
  std::string q_list, format = "csv", summary_path;
  scan_cmd->add_option("--q-max-den", scan_opts.q_max_den, "largest denominator of q");
  scan_cmd->add_option("--r-max-den", scan_opts.r_max_den, "largest denominator of r");
  scan_cmd->add_option("--q", q_list, "comma-separated q values instead of the full q grid");
  scan_cmd->add_option("--jobs", scan_opts.jobs, "worker threads (default $ROTLAB_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--out", out_path, "write records to FILE");
  scan_cmd->add_option("--summary", summary_path, "write per-q summary JSON to FILE");
  scan_cmd->add_flag("--timing", scan_opts.record_timing, "fill elapsed_ms (output no longer reproducible)");
  add_budgets(scan_cmd, budgets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "rotlab: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*rot || *trace) {
      const auto result = rotlab::rotation_number_exact(select_map(sel), budgets.budget());
      Json out = rotlab::io::rotation_json(result);
      if (*trace) out = Json{{"rotation", out}, {"trace", rotlab::io::trace_json(result.trace)}};
      emit(out.dump() + "\n", out_path);
      return result.is_undetermined() ? kExitBudget : kExitOk;
    }
    if (*estimate) {
      const auto est = rotlab::rotation_number_estimate(select_map(sel), iters);
      const Json out{{"iters", iters},
                     {"estimate", est.estimate.to_double()},
                     {"error_bound", est.error_bound.to_string()},
                     {"lower", (est.estimate - est.error_bound).to_double()},
                     {"upper", (est.estimate + est.error_bound).to_double()}};
      emit(out.dump() + "\n", out_path);
      return kExitOk;
    }
    if (*family) {
      Json out = rotlab::io::map_json(select_map(sel));
      if (sel.family == "bosh") {
        const auto bosh =
            rotlab::family_boshernitzan(flag_rational("--a", sel.a), flag_rational("--b", sel.b));
        out["k1"] = bosh.k1.to_string();
        out["k2"] = bosh.k2.to_string();
        out["target_rotation"] = bosh.target_rotation();
      }
      emit(out.dump() + "\n", out_path);
      return kExitOk;
    }
    if (*obstruct) {
      rotlab::ObstructionInput input{rotlab::PLIntervalMap::identity(),
                                     rotlab::PLIntervalMap::identity(), Rational(0)};
      if (!ob_fixture.empty()) {
        input = {rotlab::fixtures::obstruction_g(), rotlab::fixtures::obstruction_h(),
                 rotlab::fixtures::obstruction_s()};
      } else {
        if (g_file.empty() || h_file.empty()) {
          throw Error(ErrorCode::BadInput, "obstruct needs --g and --h (or --fixture paper-gh)");
        }
        auto read_interval = [](const std::string& path, const char* flag) {
          auto any = rotlab::io::read_map_file(path);
          if (auto* m = std::get_if<rotlab::PLIntervalMap>(&any)) return *m;
          throw Error(ErrorCode::BadInput,
                      std::string(flag) + " file '" + path + "' must have kind \"interval\"");
        };
        input = {read_interval(g_file, "--g"), read_interval(h_file, "--h"),
                 flag_rational("--s", s_text)};
      }
      const auto verdict = rotlab::is_f_obstruction(input, budgets.budget());
      emit(rotlab::io::verdict_json(verdict).dump() + "\n", out_path);
      return kExitOk;
    }
    if (*scan_cmd) {
      if (!q_list.empty()) scan_opts.q_values = parse_q_list(q_list);
      scan_opts.budget = budgets.budget();
      const auto records = rotlab::scan::run_scan(scan_opts);
      if (format == "csv") {
        emit(rotlab::scan::to_csv(records), out_path);
      } else {
        emit(records_json(records).dump() + "\n", out_path);
      }
      if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw Error(ErrorCode::BadInput, "cannot write --summary file '" + summary_path + "'");
        out << summary_json(rotlab::scan::summarize(records)).dump(2) << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "rotlab: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kExitBudget;
      case ErrorCode::InternalAssertion: return kExitInternal;
      default: return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "rotlab: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
