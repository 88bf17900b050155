#include "propagation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rotlab/error.hpp"

namespace rotlab::detail {

void apply_arcs(const TrackedSegment& seg, const std::vector<ArcPiece>& arcs,
                std::vector<TrackedSegment>& out) {
  const Rational c = seg.img_lo;
  const Rational d = seg.img_hi();
  auto it = std::upper_bound(arcs.begin(), arcs.end(), c,
                             [](const Rational& y, const ArcPiece& a) { return y < a.right; });
  internal_check(it != arcs.end() && it->left <= c, "segment image outside the step map's domain");
  for (; it != arcs.end() && it->left < d; ++it) {
    const Rational y0 = std::max(c, it->left);
    const Rational y1 = std::min(d, it->right);
    out.push_back(TrackedSegment{seg.dom_lo + (y0 - c) / seg.slope,
                                 seg.dom_lo + (y1 - c) / seg.slope,
                                 it->value + it->slope * (y0 - it->left), seg.slope * it->slope,
                                 seg.steps + 1});
  }
}

Propagation propagate(std::vector<TrackedSegment> seeds, const std::vector<ArcPiece>& arcs,
                      const Rational& lo, const Rational& hi, std::uint64_t min_steps,
                      std::uint64_t budget) {
  Propagation result;
  std::vector<TrackedSegment> work = std::move(seeds);
  auto pull = [&](const TrackedSegment& seg) {
    const std::size_t before = work.size();
    apply_arcs(seg, arcs, work);
    result.applications += work.size() - before;
    if (result.applications > budget) {
      throw Error(ErrorCode::BudgetExceeded,
                  "interval propagation exceeds " + std::to_string(budget) + " steps");
    }
  };
  while (!work.empty()) {
    TrackedSegment seg = std::move(work.back());
    work.pop_back();
    if (seg.steps < min_steps) {
      pull(seg);
      continue;
    }
    internal_check(seg.img_lo >= lo, "propagated image fell below the window");
    const Rational top = seg.img_hi();
    if (top <= hi) {
      result.retired.push_back(std::move(seg));
    } else if (seg.img_lo >= hi) {
      pull(seg);
    } else {
      const Rational cut = seg.dom_lo + (hi - seg.img_lo) / seg.slope;
      TrackedSegment upper{cut, seg.dom_hi, hi, seg.slope, seg.steps};
      seg.dom_hi = cut;
      result.retired.push_back(std::move(seg));
      pull(upper);
    }
  }
  std::sort(result.retired.begin(), result.retired.end(),
            [](const TrackedSegment& a, const TrackedSegment& b) { return a.dom_lo < b.dom_lo; });
  return result;
}

void check_image_tiling(const std::vector<TrackedSegment>& retired, const Rational& lo,
                        const Rational& hi) {
  std::vector<std::pair<Rational, Rational>> images;
  images.reserve(retired.size());
  for (const auto& seg : retired) images.emplace_back(seg.img_lo, seg.img_hi());
  std::sort(images.begin(), images.end());
  Rational cursor = lo;
  for (const auto& [a, b] : images) {
    internal_check(a == cursor, "return-map images leave a gap or overlap");
    cursor = b;
  }
  internal_check(cursor == hi, "return-map images do not cover the window");
}

}  // namespace rotlab::detail
