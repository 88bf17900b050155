#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rotlab/rational.hpp"

namespace rotlab {

/// One affine piece: on [left, next left) the map is value + slope*(t - left).
struct Piece {
  Rational left;
  Rational slope;
  Rational value;

  friend bool operator==(const Piece&, const Piece&) = default;
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

/// A piece of the circle map f = F mod 1 on which f is affine with image in
/// [0, 1]: covers [left, right) and sends it onto [value, value + slope*(right-left)).
struct ArcPiece {
  Rational left;
  Rational right;
  Rational slope;
  Rational value;

  Rational image_right() const { return value + slope * (right - left); }
};

/// Orientation-preserving PL homeomorphism of R/Z, stored as its lift F
/// restricted to [0, 1): F(0) lies in [0, 1), F(1) = F(0) + 1 and adjacent
/// pieces never share a slope. That normalization is unique, so map
/// equality and ordering are structural.
class PLCircleMap {
 public:
  static PLCircleMap identity();

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  /// f(t) for t in [0, 1).
  Rational evaluate(const Rational& t) const;
  /// F(t) for any rational t; F(t + 1) = F(t) + 1.
  Rational evaluate_lift(const Rational& t) const;

  /// Slope of the piece containing t (t taken mod 1).
  Rational slope_at(const Rational& t) const;
  /// Smallest lift breakpoint strictly greater than y (breakpoints repeat with period 1).
  Rational next_break_after(const Rational& y) const;

  /// The pieces of f as a map into [0, 1), split where F crosses an integer.
  std::vector<ArcPiece> circle_pieces() const;

  bool is_identity() const;
  std::vector<Rational> slopes() const;
  /// Largest numerator/denominator bit size in the piece data.
  std::size_t max_bits() const;

  friend bool operator==(const PLCircleMap&, const PLCircleMap&) = default;
  friend auto operator<=>(const PLCircleMap&, const PLCircleMap&) = default;

  /// Builds the canonical map from affine segments (lo, hi, slope, F(lo))
  /// that tile a window [c, c + 1) of the lift's domain in order. Trusted
  /// input: violations are internal assertion failures.
  struct Segment {
    Rational lo;
    Rational hi;
    Rational slope;
    Rational value;
  };
  static PLCircleMap from_lift_segments(std::vector<Segment> segments);

 private:
  explicit PLCircleMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

  std::size_t piece_index(const Rational& frac_t) const;
  Rational right_end(std::size_t i) const;

  std::vector<Piece> pieces_;
};

/// Validating constructor from mod-1 piece formulas: left endpoints start at
/// 0 and increase, values are read mod 1 and lifted with the unique
/// consistent integer shifts.
PLCircleMap make_circle_map(std::span<const Piece> mod1_pieces);

PLCircleMap inverse(const PLCircleMap& f);
/// t -> f(g(t)).
PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g);
/// n-fold self-composition, n >= 0.
PLCircleMap power(const PLCircleMap& f, unsigned n);

PLCircleMap rotation(const Rational& theta);

/// Involution exchanging [0, 1/(q+1)) and [1/(q+1), 1) with slopes q and 1/q.
PLCircleMap family_fq(const Rational& q);
/// R_r o f_q.
PLCircleMap family_fqr(const Rational& q, const Rational& r);

struct BoshernitzanMap {
  PLCircleMap map;
  Rational k1;
  Rational k2;
  /// log k1 / (log k1 - log k2), the known rotation number.
  double target_rotation() const;
};
BoshernitzanMap family_boshernitzan(const Rational& a, const Rational& b);

/// Left endpoints in (0, 1) of the maximal intervals on which f, as a map
/// into [0, 1), is affine: slope changes plus the point where the lift
/// crosses an integer.
std::vector<Rational> breakpoints(const PLCircleMap& f);

/// Points of the circle, 0 included, where the one-sided slopes differ.
std::size_t slope_discontinuities(const PLCircleMap& f);

/// A maximal closed arc [lo, hi] of fixed points; hi may exceed 1 when the
/// arc wraps through 0. The whole circle is reported as [0, 1].
struct FixedComponent {
  Rational lo;
  Rational hi;
};
std::vector<FixedComponent> fixed_points(const PLCircleMap& f);
inline bool has_fixed_point(const PLCircleMap& f) { return !fixed_points(f).empty(); }

/// Conjugates a PL bijection of the circle [a, b) (pieces with values in
/// [a, b)) to [0, 1) through u(t) = (t - a)/(b - a).
PLCircleMap rescale_from_interval(std::span<const Piece> pieces, const Rational& a,
                                  const Rational& b);

}  // namespace rotlab
