#include "rotlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <vector>

#include "rotlab/error.hpp"

namespace rotlab::io {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

Json terms_json(const std::vector<Integer>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back(integer_json(t));
  return arr;
}

std::vector<Piece> parse_pieces(const Json& doc) {
  if (!doc.contains("pieces") || !doc["pieces"].is_array()) bad_input("field 'pieces' must be an array");
  std::vector<Piece> pieces;
  std::size_t i = 0;
  for (const auto& p : doc["pieces"]) {
    const std::string where = "pieces[" + std::to_string(i++) + "]";
    if (!p.is_object()) bad_input(where + " must be an object");
    pieces.push_back(Piece{parse_rational_json(p.value("left", Json()), where + ".left"),
                           parse_rational_json(p.value("slope", Json()), where + ".slope"),
                           parse_rational_json(p.value("value_at_left", Json()),
                                               where + ".value_at_left")});
  }
  return pieces;
}

Json pieces_json(const std::vector<Piece>& pieces, bool mod1) {
  Json arr = Json::array();
  for (const auto& p : pieces) {
    arr.push_back(Json{{"left", p.left.to_string()},
                       {"slope", p.slope.to_string()},
                       {"value_at_left", (mod1 ? p.value.frac() : p.value).to_string()}});
  }
  return arr;
}

// Exact estimator bounds carry thousands of digits; serialized bounds are
// widened to the enclosing multiples of 10^-15.
Rational round_outward(const Rational& x, bool up) {
  const Integer scale("1000000000000000");
  const Integer scaled_num = x.num() * scale;
  Integer k;
  if (up) {
    mpz_cdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), x.den().get_mpz_t());
  } else {
    mpz_fdiv_q(k.get_mpz_t(), scaled_num.get_mpz_t(), x.den().get_mpz_t());
  }
  return Rational(k, scale);
}

std::string outcome_name(TraceOutcome o) {
  switch (o) {
    case TraceOutcome::Terminated: return "terminated";
    case TraceOutcome::Cycle: return "cycle";
    case TraceOutcome::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer parse_integer_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const Rational r = parse_rational_json(j, field);
    if (r.is_integer()) return r.num();
  }
  throw Error(ErrorCode::BadRational, "field '" + field + "' is not an integer");
}

Rational parse_rational_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) {
    throw Error(ErrorCode::BadRational, "field '" + field + "' must be a \"p/q\" string");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::BadRational, "field '" + field + "': " + e.what());
  }
}

Json cf_json(const ContinuedFraction& cf) {
  return Json{{"preperiod", terms_json(cf.preperiod())}, {"period", terms_json(cf.period())}};
}

Json quadratic_json(const QuadraticIrrational& x) {
  return Json{{"a", integer_json(x.a())},
              {"b", integer_json(x.b())},
              {"c", integer_json(x.c())},
              {"d", integer_json(x.d())}};
}

Json map_json(const PLCircleMap& f) {
  return Json{{"kind", "circle"}, {"pieces", pieces_json(f.pieces(), true)}};
}

Json map_json(const PLIntervalMap& g) {
  return Json{{"kind", "interval"}, {"pieces", pieces_json(g.pieces(), false)}};
}

AnyMap parse_map(const Json& doc) {
  if (!doc.is_object()) bad_input("map document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) bad_input("field 'kind' is missing");
  const std::string kind = doc["kind"].get<std::string>();
  const std::vector<Piece> pieces = parse_pieces(doc);
  if (kind == "circle") return make_circle_map(pieces);
  if (kind == "interval") return make_interval_map(pieces);
  bad_input("field 'kind' must be \"circle\" or \"interval\", got \"" + kind + "\"");
}

AnyMap read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot read map file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad_input("map file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_map(doc);
}

Json rotation_json(const RotationResult& result) {
  Json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          out["kind"] = "rational";
          out["value"] = v.to_string();
        } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
          out["kind"] = "quadratic";
          const Json parts = quadratic_json(v);
          for (const auto& [key, val] : parts.items()) out[key] = val;
        } else {
          out["kind"] = "undetermined";
          out["partial_cf"] = terms_json(v.partial_cf);
          out["estimate_interval"] = Json::array(
              {round_outward(v.lower, false).to_string(), round_outward(v.upper, true).to_string()});
          out["reason"] = v.reason;
        }
      },
      result.value);
  if (result.cf) {
    out["cf"] = cf_json(*result.cf);
    out["cf_terms"] = result.cf->term_count();
  }
  out["stages"] = result.trace.stage_count();
  return out;
}

Json trace_json(const RenormTrace& trace) {
  Json out;
  out["outcome"] = outcome_name(trace.outcome);
  if (trace.outcome == TraceOutcome::Cycle) {
    out["cycle_first"] = trace.cycle_first;
    out["cycle_repeat"] = trace.maps.size() - 1;
    out["cycle_length"] = trace.cycle_length();
  } else if (trace.outcome == TraceOutcome::Terminated) {
    out["terminated_stage"] = trace.maps.size() - 1;
  } else {
    out["budget_reason"] = trace.budget_reason;
  }
  out["quotients"] = terms_json(trace.quotients());
  Json stages = Json::array();
  for (std::size_t k = 0; k < trace.maps.size(); ++k) {
    const auto& g = trace.maps[k];
    Json st{{"index", k},
            {"pieces", g.piece_count()},
            {"breakpoints", breakpoints(g).size()},
            {"max_bits", g.max_bits()}};
    if (k < trace.steps.size()) {
      st["m"] = trace.steps[k].m;
      st["r"] = trace.steps[k].r.to_string();
      st["s"] = trace.steps[k].s.to_string();
    }
    stages.push_back(std::move(st));
  }
  out["stages"] = std::move(stages);
  const auto slopes = trace.slope_set();
  if (!slopes.empty()) {
    out["slope_range"] = Json::array({slopes.front().to_string(), slopes.back().to_string()});
  }
  if (trace.outcome == TraceOutcome::Cycle) {
    Json arr = Json::array();
    for (const auto& s : slopes) arr.push_back(s.to_string());
    out["cycle_slopes"] = std::move(arr);
  }
  return out;
}

Json verdict_json(const ObstructionVerdict& verdict) {
  Json out;
  switch (verdict.kind) {
    case VerdictKind::Obstruction: out["verdict"] = "obstruction"; break;
    case VerdictKind::NotEstablished: out["verdict"] = "not_established"; break;
    case VerdictKind::Undetermined: out["verdict"] = "undetermined"; break;
  }
  out["rotation"] = rotation_json(verdict.rotation);
  out["interval"] = Json::array({verdict.gamma.lo.to_string(), verdict.gamma.hi.to_string()});
  out["gamma"] = pieces_json(verdict.gamma.pieces, false);
  out["rescaled_gamma"] = map_json(verdict.gamma.rescaled);
  return out;
}

}  // namespace rotlab::io
