#include "rotlab/interval_map.hpp"

#include <algorithm>
#include <utility>

#include "rotlab/error.hpp"

namespace rotlab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::vector<Piece> merged(std::vector<Piece> pieces) {
  std::vector<Piece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().slope == p.slope) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

PLIntervalMap PLIntervalMap::identity() { return PLIntervalMap({Piece{kZero, kOne, kZero}}); }

Rational PLIntervalMap::right_end(std::size_t i) const {
  return i + 1 < pieces_.size() ? pieces_[i + 1].left : kOne;
}

std::size_t PLIntervalMap::piece_index(const Rational& t) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](const Rational& x, const Piece& p) { return x < p.left; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

std::vector<ArcPiece> PLIntervalMap::arc_pieces() const {
  std::vector<ArcPiece> out;
  out.reserve(pieces_.size());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    out.push_back(ArcPiece{pieces_[i].left, right_end(i), pieces_[i].slope, pieces_[i].value});
  }
  return out;
}

Rational PLIntervalMap::evaluate(const Rational& t) const {
  if (t < kZero || t > kOne) {
    throw Error(ErrorCode::DomainError, "interval map evaluated at " + t.to_string());
  }
  const auto& p = pieces_[piece_index(t)];
  return p.value + p.slope * (t - p.left);
}

PLIntervalMap make_interval_map(std::span<const Piece> pieces) {
  if (pieces.empty()) throw Error(ErrorCode::BadInput, "interval map needs at least one piece");
  if (pieces.front().left != kZero) {
    throw Error(ErrorCode::NonMonotone, "first piece must start at 0");
  }
  if (pieces.front().value != kZero) {
    throw Error(ErrorCode::EndpointNotFixed, "g(0) = " + pieces.front().value.to_string());
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.slope.sign() <= 0) {
      throw Error(ErrorCode::NonpositiveSlope,
                  "piece " + std::to_string(i) + " has slope " + p.slope.to_string());
    }
    if (p.left >= kOne || (i > 0 && p.left <= pieces[i - 1].left)) {
      throw Error(ErrorCode::NonMonotone,
                  "left endpoints must increase inside [0,1) at piece " + std::to_string(i));
    }
    if (i > 0) {
      const auto& prev = pieces[i - 1];
      const Rational expected = prev.value + prev.slope * (p.left - prev.left);
      if (expected != p.value) {
        throw Error(ErrorCode::Discontinuous, "jump at " + p.left.to_string() + ": left limit " +
                                                  expected.to_string() + ", value " +
                                                  p.value.to_string());
      }
    }
  }
  const auto& last = pieces.back();
  const Rational end = last.value + last.slope * (kOne - last.left);
  if (end != kOne) throw Error(ErrorCode::EndpointNotFixed, "g(1) = " + end.to_string());
  return PLIntervalMap(merged({pieces.begin(), pieces.end()}));
}

PLIntervalMap inverse(const PLIntervalMap& g) {
  std::vector<Piece> out;
  for (const auto& p : g.pieces_) out.push_back(Piece{p.value, p.slope.reciprocal(), p.left});
  return PLIntervalMap(merged(std::move(out)));
}

PLIntervalMap compose(const PLIntervalMap& f, const PLIntervalMap& g) {
  std::vector<Piece> out;
  for (std::size_t j = 0; j < g.pieces_.size(); ++j) {
    const auto& gp = g.pieces_[j];
    const Rational b = g.right_end(j);
    const Rational yb = gp.value + gp.slope * (b - gp.left);
    Rational y = gp.value;
    while (y < yb) {
      const std::size_t i = f.piece_index(y);
      const Rational y_next = std::min(yb, f.right_end(i));
      out.push_back(Piece{gp.left + (y - gp.value) / gp.slope, gp.slope * f.pieces_[i].slope,
                          f.evaluate(y)});
      y = y_next;
    }
  }
  return PLIntervalMap(merged(std::move(out)));
}

}  // namespace rotlab
