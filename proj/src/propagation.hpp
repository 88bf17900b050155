#pragma once

// Interval propagation shared by first-return maps and the obstruction
// return map: pull subintervals of a window through a PL step map until
// they land back in the window.

#include <cstdint>
#include <vector>

#include "rotlab/pl_map.hpp"
#include "rotlab/rational.hpp"

namespace rotlab::detail {

/// [dom_lo, dom_hi) currently sits at the affine image starting at img_lo
/// with the given slope, after `steps` applications of the step map.
struct TrackedSegment {
  Rational dom_lo;
  Rational dom_hi;
  Rational img_lo;
  Rational slope;
  std::uint64_t steps = 0;

  Rational img_hi() const { return img_lo + slope * (dom_hi - dom_lo); }
};

/// Appends the images of `seg` under one application of the step map given
/// by `arcs` (sorted, tiling the step map's domain). Steps increase by one.
void apply_arcs(const TrackedSegment& seg, const std::vector<ArcPiece>& arcs,
                std::vector<TrackedSegment>& out);

struct Propagation {
  std::vector<TrackedSegment> retired;  // sorted by dom_lo
  std::uint64_t applications = 0;
};

/// Iterates `arcs` on the seeds. A segment retires once it has at least
/// `min_steps` steps and its image lies in [lo, hi); images at or above hi
/// are pulled again. Throws Error(BudgetExceeded) past `budget` applications.
Propagation propagate(std::vector<TrackedSegment> seeds, const std::vector<ArcPiece>& arcs,
                      const Rational& lo, const Rational& hi, std::uint64_t min_steps,
                      std::uint64_t budget);

/// Asserts that the retired images tile [lo, hi) exactly.
void check_image_tiling(const std::vector<TrackedSegment>& retired, const Rational& lo,
                        const Rational& hi);

}  // namespace rotlab::detail
