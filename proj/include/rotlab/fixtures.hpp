#pragma once

#include "rotlab/interval_map.hpp"
#include "rotlab/pl_map.hpp"

namespace rotlab::fixtures {

/// Slopes 3/2, 2/3, 1 with breaks at 1/4 and 5/8; rotation number sqrt(2) - 1.
PLCircleMap theorem_main();

/// The renormalization of theorem_main(): 2/3 t + 4/9, 3/2 t + 1/6, t - 5/9.
PLCircleMap theorem_main_star();

/// Interval maps g and h whose return map at s = 1/4 is conjugate to
/// theorem_main() through t -> 3t - 3/4.
PLIntervalMap obstruction_g();
PLIntervalMap obstruction_h();
Rational obstruction_s();

}  // namespace rotlab::fixtures
