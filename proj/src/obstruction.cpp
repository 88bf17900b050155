#include "rotlab/obstruction.hpp"

#include <utility>

#include "propagation.hpp"
#include "rotlab/error.hpp"

namespace rotlab {

void validate(const ObstructionInput& input) {
  const Rational& s = input.s;
  if (s.sign() <= 0 || s >= Rational(1)) {
    throw Error(ErrorCode::DomainError, "seed s must lie in (0,1), got " + s.to_string());
  }
  const Rational gs = input.g.evaluate(s);
  const Rational hs = input.h.evaluate(s);
  if (!(s < gs && gs < hs)) {
    throw Error(ErrorCode::PreconditionFailed, "need s < g(s) < h(s); got s=" + s.to_string() +
                                                   " g(s)=" + gs.to_string() +
                                                   " h(s)=" + hs.to_string());
  }
  const Rational ghs = input.g.evaluate(hs);
  const Rational hgs = input.h.evaluate(gs);
  if (ghs != hgs) {
    throw Error(ErrorCode::CommutationFailed,
                "g(h(s)) = " + ghs.to_string() + " but h(g(s)) = " + hgs.to_string());
  }
  if (!(hs < ghs)) {
    throw Error(ErrorCode::PreconditionFailed,
                "need h(s) < g(h(s)); got h(s)=" + hs.to_string() + " g(h(s))=" + ghs.to_string());
  }
}

GammaMap gamma_map(const ObstructionInput& input, std::uint64_t budget) {
  validate(input);
  GammaMap gm;
  gm.lo = input.s;
  gm.hi = input.h.evaluate(input.s);

  // One application of g, not counted as a return step.
  std::vector<detail::TrackedSegment> seeds;
  detail::apply_arcs(detail::TrackedSegment{gm.lo, gm.hi, gm.lo, Rational(1), 0},
                     input.g.arc_pieces(), seeds);
  for (auto& seg : seeds) seg.steps = 0;

  const detail::Propagation prop =
      detail::propagate(std::move(seeds), inverse(input.h).arc_pieces(), gm.lo, gm.hi, 0, budget);
  detail::check_image_tiling(prop.retired, gm.lo, gm.hi);

  for (const auto& seg : prop.retired) {
    if (!gm.pieces.empty()) {
      const auto& last = gm.pieces.back();
      if (last.slope == seg.slope && last.value + last.slope * (seg.dom_lo - last.left) == seg.img_lo) {
        continue;
      }
    }
    gm.pieces.push_back(Piece{seg.dom_lo, seg.slope, seg.img_lo});
  }
  gm.rescaled = rescale_from_interval(gm.pieces, gm.lo, gm.hi);
  return gm;
}

ObstructionVerdict is_f_obstruction(const ObstructionInput& input, const RenormBudget& budget) {
  ObstructionVerdict verdict;
  verdict.gamma = gamma_map(input, budget.orbit_budget);
  verdict.rotation = rotation_number_exact(verdict.gamma.rescaled, budget);
  if (verdict.rotation.is_quadratic()) {
    verdict.kind = VerdictKind::Obstruction;
  } else if (verdict.rotation.is_rational()) {
    verdict.kind = VerdictKind::NotEstablished;
  } else {
    verdict.kind = VerdictKind::Undetermined;
  }
  return verdict;
}

}  // namespace rotlab
