#pragma once

#include "hlpos/combinat/gt_array.hpp"

#include <vector>

namespace hlpos::plactic {

using combinat::GTArray;

// Particle moves on one level of an interlacing array. `upper` is a level
// with j entries, `lower` the level below with j-1 entries, and i (1-based)
// the particle of `lower` that has just moved one step right. Both return
// the new upper level. Throws std::invalid_argument unless lower interlaces
// upper and lower + e_i is still a partition.
//
// Pull: upper + e_i if lower_i == upper_i, otherwise upper + e_{i+1}.
std::vector<int> pull_move(const std::vector<int>& upper, const std::vector<int>& lower, int i);
// Push: upper + e_m with m = max{p <= i : upper_p < lower_{p-1}} (lower_0 = inf).
std::vector<int> push_move(const std::vector<int>& upper, const std::vector<int>& lower, int i);

// Row insertion of x on the array: particle 1 of level x moves, then every
// higher level reacts by a pull.
GTArray pull_insert(const GTArray& g, int x);
// Column insertion of x on the array: level x receives a push arriving at
// index x (so particle x moves unless blocked), then every higher level
// reacts by a push.
GTArray push_insert(int x, const GTArray& g);

}  // namespace hlpos::plactic
