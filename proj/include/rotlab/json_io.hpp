#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "rotlab/continued_fraction.hpp"
#include "rotlab/interval_map.hpp"
#include "rotlab/obstruction.hpp"
#include "rotlab/pl_map.hpp"
#include "rotlab/renorm.hpp"

namespace rotlab::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& z);
Integer parse_integer_json(const Json& j, const std::string& field);

Rational parse_rational_json(const Json& j, const std::string& field);

Json cf_json(const ContinuedFraction& cf);
Json quadratic_json(const QuadraticIrrational& x);

/// {"kind":"circle","pieces":[{"left","slope","value_at_left"}...]}, values mod 1.
Json map_json(const PLCircleMap& f);
/// Same schema with "kind":"interval" and actual values.
Json map_json(const PLIntervalMap& g);

using AnyMap = std::variant<PLCircleMap, PLIntervalMap>;

/// Parses and fully validates a map document. Malformed structure raises
/// Error(BadInput) and malformed numbers Error(BadRational); both name the
/// offending field.
AnyMap parse_map(const Json& doc);
AnyMap read_map_file(const std::string& path);

Json rotation_json(const RotationResult& result);
Json trace_json(const RenormTrace& trace);
Json verdict_json(const ObstructionVerdict& verdict);

}  // namespace rotlab::io
