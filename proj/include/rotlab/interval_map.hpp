#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rotlab/pl_map.hpp"
#include "rotlab/rational.hpp"

namespace rotlab {

/// Orientation-preserving PL homeomorphism of [0, 1] fixing both endpoints.
/// Canonical: adjacent pieces have distinct slopes.
class PLIntervalMap {
 public:
  static PLIntervalMap identity();

  const std::vector<Piece>& pieces() const { return pieces_; }
  /// Right endpoint of piece i.
  Rational right_end(std::size_t i) const;

  /// g(t) for t in [0, 1].
  Rational evaluate(const Rational& t) const;
  /// Index of the piece containing t; t = 1 belongs to the last piece.
  std::size_t piece_index(const Rational& t) const;
  /// Pieces with explicit right endpoints.
  std::vector<ArcPiece> arc_pieces() const;

  friend bool operator==(const PLIntervalMap&, const PLIntervalMap&) = default;

 private:
  friend PLIntervalMap make_interval_map(std::span<const Piece> pieces);
  friend PLIntervalMap inverse(const PLIntervalMap& g);
  friend PLIntervalMap compose(const PLIntervalMap& f, const PLIntervalMap& g);

  explicit PLIntervalMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

  std::vector<Piece> pieces_;
};

PLIntervalMap make_interval_map(std::span<const Piece> pieces);
PLIntervalMap inverse(const PLIntervalMap& g);
/// t -> f(g(t)).
PLIntervalMap compose(const PLIntervalMap& f, const PLIntervalMap& g);

}  // namespace rotlab
