#pragma once

#include <cstdint>
#include <vector>

#include "rotlab/interval_map.hpp"
#include "rotlab/pl_map.hpp"
#include "rotlab/renorm.hpp"

namespace rotlab {

/// A pair of interval homeomorphisms and a seed s with
/// s < g(s) < h(s) < g(h(s)) = h(g(s)).
struct ObstructionInput {
  PLIntervalMap g;
  PLIntervalMap h;
  Rational s;
};

/// Throws PreconditionFailed when the ordering chain fails and
/// CommutationFailed when g(h(s)) != h(g(s)).
void validate(const ObstructionInput& input);

/// gamma(t) = h^{-l(t)}(g(t)) on [s, h(s)), l(t) >= 0 minimal.
struct GammaMap {
  Rational lo;
  Rational hi;
  /// Pieces on [lo, hi) with values in [lo, hi).
  std::vector<Piece> pieces;
  /// gamma conjugated to [0, 1) by t -> (t - lo)/(hi - lo).
  PLCircleMap rescaled = PLCircleMap::identity();
};

GammaMap gamma_map(const ObstructionInput& input,
                   std::uint64_t budget = RenormBudget{}.orbit_budget);

enum class VerdictKind { Obstruction, NotEstablished, Undetermined };

struct ObstructionVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  GammaMap gamma;
  RotationResult rotation;
};

ObstructionVerdict is_f_obstruction(const ObstructionInput& input, const RenormBudget& budget = {});

}  // namespace rotlab
