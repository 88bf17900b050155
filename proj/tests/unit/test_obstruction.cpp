#include <doctest.h>

#include <vector>

#include "generators.hpp"
#include "rotlab/error.hpp"
#include "rotlab/fixtures.hpp"
#include "rotlab/obstruction.hpp"

using namespace rotlab;

namespace {

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

ObstructionInput fixture_input() { return {fixtures::obstruction_g(), fixtures::obstruction_h(), fixtures::obstruction_s()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalAssertion;
}

PLIntervalMap through(std::vector<std::pair<Rational, Rational>> knots) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const auto& [x0, y0] = knots[i];
    const auto& [x1, y1] = knots[i + 1];
    pieces.push_back({x0, (y1 - y0) / (x1 - x0), y0});
  }
  return make_interval_map(pieces);
}

// gamma(t) by walking h^{-1} from g(t) one point at a time.
Rational brute_gamma(const ObstructionInput& in, const Rational& t) {
  const PLIntervalMap hinv = inverse(in.h);
  const Rational hi = in.h.evaluate(in.s);
  Rational y = in.g.evaluate(t);
  while (!(in.s <= y && y < hi)) y = hinv.evaluate(y);
  return y;
}

Rational gamma_at(const GammaMap& gm, const Rational& t) {
  const Piece* piece = &gm.pieces.front();
  for (const auto& p : gm.pieces)
    if (p.left <= t) piece = &p;
  return piece->value + piece->slope * (t - piece->left);
}

}  // namespace

TEST_CASE("the fixture satisfies the chain") {
  const ObstructionInput in = fixture_input();
  CHECK_NOTHROW(validate(in));
  CHECK(in.g.evaluate(R(1, 4)) == R(3, 8));
  CHECK(in.h.evaluate(R(1, 4)) == R(7, 12));
  CHECK(in.g.evaluate(R(7, 12)) == R(17, 24));
}

TEST_CASE("gamma of the fixture") {
  const GammaMap gm = gamma_map(fixture_input());
  CHECK(gm.lo == R(1, 4));
  CHECK(gm.hi == R(7, 12));
  const std::vector<Piece> expected{{R(1, 4), R(3, 2), R(3, 8)},
                                    {R(1, 3), R(2, 3), R(1, 2)},
                                    {R(11, 24), R(1), R(1, 4)}};
  CHECK(gm.pieces == expected);
  CHECK(gm.rescaled == fixtures::theorem_main());
  // The chart t -> 3t - 3/4 conjugates gamma to the rescaled map.
  for (long k = 0; k < 36; ++k) {
    const Rational t = R(1, 4) + R(k, 108);
    CHECK(R(3) * gamma_at(gm, t) - R(3, 4) == gm.rescaled.evaluate(R(3) * t - R(3, 4)));
    CHECK(gamma_at(gm, t) == brute_gamma(fixture_input(), t));
  }
}

TEST_CASE("verdicts") {
  const ObstructionVerdict v = is_f_obstruction(fixture_input());
  CHECK(v.kind == VerdictKind::Obstruction);
  CHECK(std::get<QuadraticIrrational>(v.rotation.value) == QuadraticIrrational(-1, 1, 1, 2));

  const ObstructionVerdict capped = is_f_obstruction(fixture_input(), {1, 1000, 65536});
  CHECK(capped.kind == VerdictKind::Undetermined);
}

TEST_CASE("a pair whose gamma is a rational rotation") {
  // gamma(t) = t + 1/8 on [1/4, 3/8) and t - 1/8 on [3/8, 1/2).
  const PLIntervalMap g = through({{R(0), R(0)}, {R(1, 4), R(3, 8)}, {R(3, 4), R(7, 8)}, {R(1), R(1)}});
  const PLIntervalMap h = through({{R(0), R(0)}, {R(1, 4), R(1, 2)}, {R(1, 2), R(3, 4)}, {R(1), R(1)}});
  const ObstructionInput in{g, h, R(1, 4)};
  CHECK_NOTHROW(validate(in));
  for (long k = 0; k < 64; ++k) {
    const Rational t = R(1, 4) + R(k, 256);
    CHECK(brute_gamma(in, brute_gamma(in, t)) == t);
    CHECK(brute_gamma(in, t) != t);
  }
  const ObstructionVerdict v = is_f_obstruction(in);
  CHECK(v.kind == VerdictKind::NotEstablished);
  CHECK(std::get<Rational>(v.rotation.value) == R(1, 2));
  CHECK(v.gamma.rescaled == rotation(R(1, 2)));
}

TEST_CASE("validation failures") {
  const ObstructionInput in = fixture_input();
  CHECK(code_of([&] { validate({in.h, in.g, in.s}); }) == ErrorCode::PreconditionFailed);
  CHECK(code_of([&] { validate({in.g, in.h, R(0)}); }) == ErrorCode::DomainError);

  // Bend h inside [1/4, 7/12) so h(1/4) stays 7/12 but h(g(1/4)) moves.
  std::vector<Piece> bent;
  for (const auto& p : in.h.pieces()) {
    if (p.left == R(1, 4)) {
      bent.push_back({R(1, 4), R(1, 2), R(7, 12)});
      bent.push_back({R(1, 3), R(7, 6), R(5, 8)});
    } else {
      bent.push_back(p);
    }
  }
  const ObstructionInput perturbed{in.g, make_interval_map(bent), in.s};
  CHECK(perturbed.h.evaluate(R(1, 4)) == R(7, 12));
  CHECK(code_of([&] { validate(perturbed); }) == ErrorCode::CommutationFailed);
  CHECK(code_of([&] { (void)gamma_map(perturbed); }) == ErrorCode::CommutationFailed);
}

TEST_CASE("gamma of random pairs commuting at s matches point orbits") {
  testing::Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto cuts = testing::distinct_cuts(rng, 4, 24);
    const Rational s = cuts[0], a = cuts[1], b = cuts[2], c = cuts[3];
    // g: s -> a, b -> c; h: s -> b, a -> c. Extra knots bend both maps.
    const PLIntervalMap g =
        through({{R(0), R(0)}, {s, a}, {b, c}, {(b + R(1)) / R(2), (c + R(1)) / R(2)}, {R(1), R(1)}});
    const PLIntervalMap h = through({{R(0), R(0)}, {s / R(2), b / R(3)}, {s, b}, {a, c}, {R(1), R(1)}});
    const ObstructionInput in{g, h, s};
    REQUIRE_NOTHROW(validate(in));
    const GammaMap gm = gamma_map(in);
    for (int k = 0; k < 6; ++k) {
      const Rational t = s + (b - s) * testing::unit_fraction(rng, 50);
      REQUIRE(gamma_at(gm, t) == brute_gamma(in, t));
    }
  }
}

TEST_CASE("the verdict does not depend on the chart") {
  const GammaMap gm = gamma_map(fixture_input());
  for (const Rational& base : {R(1, 3), R(2, 5)}) {
    // Measuring [1/4, 7/12) from another base point conjugates by a rotation.
    const PLCircleMap shift = rotation(base);
    const RotationResult moved = rotation_number_exact(compose(shift, compose(gm.rescaled, inverse(shift))));
    REQUIRE(moved.is_quadratic());
    CHECK(std::get<QuadraticIrrational>(moved.value) == QuadraticIrrational(-1, 1, 1, 2));
  }
}
