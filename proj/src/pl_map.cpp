#include "rotlab/pl_map.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "rotlab/error.hpp"

namespace rotlab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void merge_equal_slopes(std::vector<Piece>& pieces) {
  std::vector<Piece> merged;
  merged.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!merged.empty() && merged.back().slope == p.slope) continue;
    merged.push_back(std::move(p));
  }
  pieces = std::move(merged);
}

}  // namespace

PLCircleMap PLCircleMap::identity() { return PLCircleMap({Piece{kZero, kOne, kZero}}); }

PLCircleMap PLCircleMap::from_lift_segments(std::vector<Segment> segments) {
  // Cut at integers, then translate every portion into [0, 1) using F(t - n) = F(t) - n.
  std::vector<Piece> pieces;
  for (auto& s : segments) {
    internal_check(s.lo < s.hi, "degenerate lift segment");
    internal_check(s.slope.sign() > 0, "nonpositive slope in lift segment");
    Rational lo = s.lo;
    Rational value = s.value;
    while (lo < s.hi) {
      const Integer n = lo.floor();
      const Rational cut = std::min(s.hi, Rational(Integer(n + 1)));
      pieces.push_back(Piece{lo - Rational(n), s.slope, value - Rational(n)});
      value += s.slope * (cut - lo);
      lo = cut;
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.left < y.left; });
  internal_check(!pieces.empty() && pieces.front().left == kZero, "lift segments must cover 0");
  const Rational shift(pieces.front().value.floor());
  for (auto& p : pieces) p.value -= shift;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const auto& p = pieces[i];
    const auto& q = pieces[i + 1];
    internal_check(p.left < q.left, "overlapping lift segments");
    internal_check(p.value + p.slope * (q.left - p.left) == q.value, "discontinuous lift segments");
  }
  const auto& last = pieces.back();
  internal_check(last.value + last.slope * (kOne - last.left) == pieces.front().value + kOne,
                 "lift segments do not close up to degree one");
  merge_equal_slopes(pieces);
  return PLCircleMap(std::move(pieces));
}

std::size_t PLCircleMap::piece_index(const Rational& frac_t) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), frac_t,
                             [](const Rational& t, const Piece& p) { return t < p.left; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

Rational PLCircleMap::right_end(std::size_t i) const {
  return i + 1 < pieces_.size() ? pieces_[i + 1].left : kOne;
}

Rational PLCircleMap::evaluate(const Rational& t) const {
  if (t < kZero || t >= kOne) {
    throw Error(ErrorCode::DomainError, "evaluate needs t in [0,1), got " + t.to_string());
  }
  return evaluate_lift(t).frac();
}

Rational PLCircleMap::evaluate_lift(const Rational& t) const {
  const Rational n(t.floor());
  const Rational x = t - n;
  const auto& p = pieces_[piece_index(x)];
  return n + p.value + p.slope * (x - p.left);
}

Rational PLCircleMap::slope_at(const Rational& t) const {
  return pieces_[piece_index(t.frac())].slope;
}

Rational PLCircleMap::next_break_after(const Rational& y) const {
  const Rational n(y.floor());
  const std::size_t i = piece_index(y - n);
  return n + right_end(i);
}

std::vector<ArcPiece> PLCircleMap::circle_pieces() const {
  std::vector<ArcPiece> out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    const Rational right = right_end(i);
    const Rational v_right = p.value + p.slope * (right - p.left);
    // Lift values stay inside [F(0), F(0) + 1], so at most the integer 1 is crossed.
    if (p.value < kOne && v_right > kOne) {
      const Rational u = p.left + (kOne - p.value) / p.slope;
      out.push_back(ArcPiece{p.left, u, p.slope, p.value});
      out.push_back(ArcPiece{u, right, p.slope, kZero});
    } else {
      out.push_back(ArcPiece{p.left, right, p.slope, p.value.frac()});
    }
  }
  return out;
}

bool PLCircleMap::is_identity() const { return *this == identity(); }

std::vector<Rational> PLCircleMap::slopes() const {
  std::vector<Rational> out;
  for (const auto& p : pieces_) out.push_back(p.slope);
  return out;
}

std::size_t PLCircleMap::max_bits() const {
  std::size_t bits = 0;
  for (const auto& p : pieces_) {
    bits = std::max({bits, p.left.bit_size(), p.slope.bit_size(), p.value.bit_size()});
  }
  return bits;
}

PLCircleMap make_circle_map(std::span<const Piece> mod1_pieces) {
  if (mod1_pieces.empty()) throw Error(ErrorCode::BadInput, "circle map needs at least one piece");
  if (mod1_pieces.front().left != kZero) {
    throw Error(ErrorCode::NonMonotone, "first piece must start at 0");
  }
  std::vector<Piece> lift;
  for (std::size_t i = 0; i < mod1_pieces.size(); ++i) {
    const auto& p = mod1_pieces[i];
    if (p.slope.sign() <= 0) {
      throw Error(ErrorCode::NonpositiveSlope,
                  "piece " + std::to_string(i) + " has slope " + p.slope.to_string());
    }
    if (p.left >= kOne || (i > 0 && p.left <= mod1_pieces[i - 1].left)) {
      throw Error(ErrorCode::NonMonotone,
                  "left endpoints must increase inside [0,1) at piece " + std::to_string(i));
    }
    if (i == 0) {
      lift.push_back(Piece{p.left, p.slope, p.value.frac()});
      continue;
    }
    const auto& prev = lift.back();
    const Rational expected = prev.value + prev.slope * (p.left - prev.left);
    if (expected.frac() != p.value.frac()) {
      throw Error(ErrorCode::DiscontinuousCircleMap,
                  "jump at " + p.left.to_string() + ": left limit " + expected.frac().to_string() +
                      ", value " + p.value.frac().to_string());
    }
    lift.push_back(Piece{p.left, p.slope, expected});
  }
  const auto& last = lift.back();
  const Rational end = last.value + last.slope * (kOne - last.left);
  const Rational degree = end - lift.front().value;
  if (!degree.is_integer()) {
    throw Error(ErrorCode::DiscontinuousCircleMap, "map does not close up at 1");
  }
  if (degree != kOne) {
    throw Error(ErrorCode::NotBijective, "lift has degree " + degree.to_string() + ", expected 1");
  }
  std::vector<PLCircleMap::Segment> segs;
  for (std::size_t i = 0; i < lift.size(); ++i) {
    const Rational hi = i + 1 < lift.size() ? lift[i + 1].left : kOne;
    segs.push_back({lift[i].left, hi, lift[i].slope, lift[i].value});
  }
  return PLCircleMap::from_lift_segments(std::move(segs));
}

PLCircleMap inverse(const PLCircleMap& f) {
  const auto& ps = f.pieces();
  std::vector<PLCircleMap::Segment> segs;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Rational right = i + 1 < ps.size() ? ps[i + 1].left : kOne;
    const Rational v_right = ps[i].value + ps[i].slope * (right - ps[i].left);
    segs.push_back({ps[i].value, v_right, ps[i].slope.reciprocal(), ps[i].left});
  }
  return PLCircleMap::from_lift_segments(std::move(segs));
}

PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g) {
  const auto& gp = g.pieces();
  std::vector<PLCircleMap::Segment> segs;
  for (std::size_t j = 0; j < gp.size(); ++j) {
    const Rational a = gp[j].left;
    const Rational b = j + 1 < gp.size() ? gp[j + 1].left : kOne;
    const Rational& sigma = gp[j].slope;
    const Rational ya = gp[j].value;
    const Rational yb = ya + sigma * (b - a);
    Rational y = ya;
    while (y < yb) {
      const Rational y_next = std::min(yb, f.next_break_after(y));
      segs.push_back({a + (y - ya) / sigma, a + (y_next - ya) / sigma, sigma * f.slope_at(y),
                      f.evaluate_lift(y)});
      y = y_next;
    }
  }
  return PLCircleMap::from_lift_segments(std::move(segs));
}

PLCircleMap power(const PLCircleMap& f, unsigned n) {
  PLCircleMap out = PLCircleMap::identity();
  for (unsigned i = 0; i < n; ++i) out = compose(f, out);
  return out;
}

PLCircleMap rotation(const Rational& theta) {
  if (theta < kZero || theta >= kOne) {
    throw Error(ErrorCode::DomainError, "rotation angle must lie in [0,1), got " + theta.to_string());
  }
  const Piece p{kZero, kOne, theta};
  return make_circle_map(std::span(&p, 1));
}

PLCircleMap family_fq(const Rational& q) {
  if (q.sign() <= 0) throw Error(ErrorCode::DomainError, "f_q needs q > 0, got " + q.to_string());
  const Rational split = (q + kOne).reciprocal();
  if (q == kOne) return rotation(split);
  const Piece ps[] = {{kZero, q, split}, {split, q.reciprocal(), kZero}};
  return make_circle_map(ps);
}

PLCircleMap family_fqr(const Rational& q, const Rational& r) {
  return compose(rotation(r), family_fq(q));
}

double BoshernitzanMap::target_rotation() const {
  const double l1 = std::log(k1.to_double());
  const double l2 = std::log(k2.to_double());
  return l1 / (l1 - l2);
}

BoshernitzanMap family_boshernitzan(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0 || a + b >= kOne) {
    throw Error(ErrorCode::DomainError,
                "phi_{a,b} needs 0 < a, 0 < b, a + b < 1; got a=" + a.to_string() +
                    " b=" + b.to_string());
  }
  const Rational k1 = (kOne - b) / a;
  const Rational k2 = b / (kOne - a);
  const Piece ps[] = {{kZero, k1, b}, {a, k2, kZero}};
  return {make_circle_map(ps), k1, k2};
}

std::vector<Rational> breakpoints(const PLCircleMap& f) {
  std::vector<Rational> out;
  for (const auto& arc : f.circle_pieces()) {
    if (arc.left != kZero) out.push_back(arc.left);
  }
  return out;
}

std::size_t slope_discontinuities(const PLCircleMap& f) {
  const auto& ps = f.pieces();
  std::size_t count = ps.size() - 1;
  if (ps.back().slope != ps.front().slope) ++count;
  return count;
}

std::vector<FixedComponent> fixed_points(const PLCircleMap& f) {
  const auto& ps = f.pieces();
  std::vector<FixedComponent> raw;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& p = ps[i];
    const Rational right = i + 1 < ps.size() ? ps[i + 1].left : kOne;
    // F(t) - t takes values in (F(0) - 1, F(0) + 1), so only k = 0, 1 can occur.
    for (int k : {0, 1}) {
      const Rational target(k);
      if (p.slope == kOne) {
        if (p.value - p.left == target) raw.push_back({p.left, right});
        continue;
      }
      const Rational t = (target - p.value + p.slope * p.left) / (p.slope - kOne);
      if (t >= p.left && t < right) raw.push_back({t, t});
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const FixedComponent& x, const FixedComponent& y) { return x.lo < y.lo; });
  std::vector<FixedComponent> merged;
  for (auto& c : raw) {
    if (!merged.empty() && c.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, c.hi);
    } else {
      merged.push_back(std::move(c));
    }
  }
  if (merged.size() >= 2 && merged.back().hi == kOne && merged.front().lo == kZero) {
    merged.front().lo = merged.back().lo;
    merged.front().hi += kOne;
    merged.pop_back();
    // Keep components ordered by their starting point.
    std::rotate(merged.begin(), merged.begin() + 1, merged.end());
  }
  return merged;
}

PLCircleMap rescale_from_interval(std::span<const Piece> pieces, const Rational& a,
                                  const Rational& b) {
  if (!(a < b)) throw Error(ErrorCode::DomainError, "rescale needs a < b");
  const Rational width = b - a;
  std::vector<Piece> mod1;
  mod1.reserve(pieces.size());
  for (const auto& p : pieces) {
    if (p.value < a || p.value >= b) {
      throw Error(ErrorCode::DomainError, "piece value " + p.value.to_string() +
                                              " outside [" + a.to_string() + "," + b.to_string() +
                                              ")");
    }
    mod1.push_back(Piece{(p.left - a) / width, p.slope, (p.value - a) / width});
  }
  return make_circle_map(mod1);
}

}  // namespace rotlab
