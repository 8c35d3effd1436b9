#pragma once

#include "hlpos/combinat/partition.hpp"

#include <string>
#include <vector>

namespace hlpos::combinat {

// Interlacing array lambda^(1) < lambda^(2) < ... < lambda^(n): level j has
// exactly j entries (zero padded) and interlaces with level j-1.
class GTArray {
 public:
  GTArray() = default;
  // levels[j-1] is level j; shorter rows are zero padded. Throws
  // std::invalid_argument on an interlacing violation or a level longer
  // than its index.
  explicit GTArray(std::vector<std::vector<int>> levels);

  int depth() const { return static_cast<int>(levels_.size()); }
  // 1-based level, padded to length j.
  const std::vector<int>& level(int j) const { return levels_.at(static_cast<std::size_t>(j - 1)); }
  Partition shape(int j) const { return Partition(level(j)); }
  Partition top() const { return depth() == 0 ? Partition() : shape(depth()); }
  const std::vector<std::vector<int>>& levels() const { return levels_; }

  // Levels separated by '|', e.g. "4|4,3|5,3,3".
  std::string to_string() const;

  auto operator<=>(const GTArray&) const = default;

 private:
  std::vector<std::vector<int>> levels_;
};

// True iff lower (length j-1) interlaces upper (length j):
// upper_1 >= lower_1 >= upper_2 >= ... >= lower_{j-1} >= upper_j.
bool interlaces(const std::vector<int>& lower, const std::vector<int>& upper);

// Every array of depth n with top level lambda, each exactly once, ordered
// lexicographically on the concatenated level vectors (smallest first).
// Empty when length(lambda) > n.
std::vector<GTArray> enumerate_gt(const Partition& lambda, int n);

}  // namespace hlpos::combinat
