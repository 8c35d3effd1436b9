#include "hlpos/plactic/particles.hpp"

#include <limits>
#include <stdexcept>

namespace hlpos::plactic {

namespace {

void check_move(const std::vector<int>& upper, const std::vector<int>& lower, int i) {
  if (!combinat::interlaces(lower, upper)) throw std::invalid_argument("levels do not interlace");
  if (i < 1 || i > static_cast<int>(lower.size())) throw std::invalid_argument("moved particle index out of range");
  if (i > 1 && lower[i - 1] + 1 > lower[i - 2]) throw std::invalid_argument("moved level is not a partition");
}

// 1-based index of the particle of `upper` that a push arriving at index i
// moves; i may equal upper.size() for the particle entering at level x.
int push_target(const std::vector<int>& upper, const std::vector<int>& lower, int i) {
  int m = 0;
  for (int p = 1; p <= i; ++p) {
    const int bound = p == 1 ? std::numeric_limits<int>::max() : lower[p - 2];
    if (upper[p - 1] < bound) m = p;
  }
  if (m == 0) throw std::logic_error("no particle can be pushed");
  return m;
}

template <class Move>
GTArray insert_with(const GTArray& g, int x, int first_index, Move move) {
  const int n = g.depth();
  if (x < 1 || x > n) throw std::invalid_argument("letter outside the array depth");
  auto levels = g.levels();
  ++levels[x - 1][first_index - 1];
  int i = first_index;
  for (int j = x + 1; j <= n; ++j) {
    auto lower_before = g.level(j - 1);
    auto next = move(levels[j - 1], lower_before, i);
    int moved = 0;
    for (int p = 0; p < j; ++p) {
      if (next[p] != levels[j - 1][p]) moved = p + 1;
    }
    levels[j - 1] = std::move(next);
    i = moved;
  }
  return GTArray(std::move(levels));
}

}  // namespace

std::vector<int> pull_move(const std::vector<int>& upper, const std::vector<int>& lower, int i) {
  check_move(upper, lower, i);
  auto out = upper;
  if (lower[i - 1] == upper[i - 1]) ++out[i - 1];
  else ++out[i];
  return out;
}

std::vector<int> push_move(const std::vector<int>& upper, const std::vector<int>& lower, int i) {
  check_move(upper, lower, i);
  auto out = upper;
  ++out[push_target(upper, lower, i) - 1];
  return out;
}

GTArray pull_insert(const GTArray& g, int x) { return insert_with(g, x, 1, pull_move); }

GTArray push_insert(int x, const GTArray& g) {
  if (x < 1 || x > g.depth()) throw std::invalid_argument("letter outside the array depth");
  // the new particle enters level x as a push arriving at index x
  const int first = x == 1 ? 1 : push_target(g.level(x), g.level(x - 1), x);
  return insert_with(g, x, first, push_move);
}

}  // namespace hlpos::plactic
