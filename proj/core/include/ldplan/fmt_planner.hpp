#pragma once

#include "ldplan/roadmap.hpp"

namespace ldplan {

/// Fast-marching expansion over a lazily built radius roadmap: vertices
/// leave the open set in cost order and unvisited neighbors connect through
/// their locally best open parent, checking collisions only for chosen
/// edges. Returns cost >= the gPRM cost on identical samples and radius.
/// Mutates roadmap stats (collision-check counter).
PlanResult fmt_plan(Roadmap& roadmap, const Problem& problem,
                    int chain_resolution = 16);

}  // namespace ldplan
