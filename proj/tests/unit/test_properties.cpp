#include <doctest.h>

#include "properties.hpp"

using rotlab::testing::PropertyReport;

namespace {

constexpr std::size_t kCases = 500;

void require_all(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports) {
    INFO(r.summary());
    CHECK(r.passed(kCases));
  }
}

}  // namespace

TEST_CASE("map algebra properties") { require_all(rotlab::testing::map_algebra_properties(1, kCases)); }

TEST_CASE("renormalization properties") { require_all(rotlab::testing::renorm_properties(2, kCases)); }

TEST_CASE("estimator bound") {
  const auto reports = rotlab::testing::estimator_properties(3, kCases);
  INFO(reports[0].summary());
  CHECK(reports[0].failures == 0);
  CHECK(reports[0].cases == 3 * rotlab::testing::known_fixtures().size());
  INFO(reports[1].summary());
  CHECK(reports[1].passed(kCases));
}

TEST_CASE("inverse law on irrational maps") { require_all(rotlab::testing::inverse_law_properties(4, kCases)); }
