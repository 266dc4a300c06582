#ifndef SICACHE_SRC_SIMULATOR_INTERNAL_H_
#define SICACHE_SRC_SIMULATOR_INTERNAL_H_

#include <vector>

#include "sicache/simulator.h"

namespace sicache::internal {

struct Sbs {
  double distance_sq;  // km^2
  double fading;
};

// Draws the layout of one trial, redrawing degenerate ones. On return the
// nearest max_layers + 1 SBSs occupy the front in strictly ascending distance;
// the rest follow in unspecified order.
std::vector<Sbs> draw_layout(const SimConfig& cfg, long trial_index, int* redraws);

}  // namespace sicache::internal

#endif  // SICACHE_SRC_SIMULATOR_INTERNAL_H_
