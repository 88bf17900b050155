#include "rotlab/fixtures.hpp"

namespace rotlab::fixtures {

namespace {
Rational q(const char* text) { return Rational::parse(text); }
}  // namespace

PLCircleMap theorem_main() {
  const Piece ps[] = {{q("0"), q("3/2"), q("3/8")},
                      {q("1/4"), q("2/3"), q("3/4")},
                      {q("5/8"), q("1"), q("0")}};
  return make_circle_map(ps);
}

PLCircleMap theorem_main_star() {
  const Piece ps[] = {{q("0"), q("2/3"), q("4/9")},
                      {q("1/3"), q("3/2"), q("2/3")},
                      {q("5/9"), q("1"), q("0")}};
  return make_circle_map(ps);
}

PLIntervalMap obstruction_g() {
  const Piece ps[] = {{q("0"), q("3/2"), q("0")},
                      {q("1/3"), q("2/3"), q("1/2")},
                      {q("11/24"), q("1"), q("7/12")},
                      {q("5/8"), q("2/3"), q("3/4")}};
  return make_interval_map(ps);
}

PLIntervalMap obstruction_h() {
  // 27/8 t | 9/4 t + 1/48 | t + 1/3 | 16/81 t + 779/972 | 8/27 t + 19/27
  const Piece ps[] = {{q("0"), q("27/8"), q("0")},
                      {q("1/54"), q("9/4"), q("1/16")},
                      {q("1/4"), q("1"), q("7/12")},
                      {q("7/12"), q("16/81"), q("11/12")},
                      {q("95/96"), q("8/27"), q("323/324")}};
  return make_interval_map(ps);
}

Rational obstruction_s() { return q("1/4"); }

}  // namespace rotlab::fixtures
