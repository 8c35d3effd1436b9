#include "hlpos/combinat/gt_array.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hlpos::combinat {

bool interlaces(const std::vector<int>& lower, const std::vector<int>& upper) {
  if (upper.size() != lower.size() + 1) return false;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
  }
  return true;
}

GTArray::GTArray(std::vector<std::vector<int>> levels) : levels_(std::move(levels)) {
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    auto& lv = levels_[j];
    if (lv.size() > j + 1) throw std::invalid_argument("level " + std::to_string(j + 1) + " has too many entries");
    lv.resize(j + 1, 0);
    if (std::any_of(lv.begin(), lv.end(), [](int x) { return x < 0; })) {
      throw std::invalid_argument("negative entry in interlacing array");
    }
    if (j > 0 && !interlaces(levels_[j - 1], lv)) {
      throw std::invalid_argument("levels " + std::to_string(j) + " and " + std::to_string(j + 1) + " do not interlace");
    }
  }
}

std::string GTArray::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (j) s += "|";
    for (std::size_t i = 0; i < levels_[j].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(levels_[j][i]);
    }
  }
  return s;
}

std::vector<GTArray> enumerate_gt(const Partition& lambda, int n) {
  std::vector<GTArray> out;
  if (n < 0 || lambda.length() > n) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(n));
  levels[n - 1] = lambda.padded(static_cast<std::size_t>(n));
  // Choose levels from the top down; collect, then sort into the
  // bottom-level-first lexicographic order.
  std::function<void(int)> rec = [&](int j) {
    if (j == 0) {
      out.emplace_back(levels);
      return;
    }
    const auto& up = levels[j];
    auto& cur = levels[j - 1];
    cur.assign(static_cast<std::size_t>(j), 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == j) {
        rec(j - 1);
        return;
      }
      for (int v = up[i + 1]; v <= up[i]; ++v) {
        cur[i] = v;
        fill(i + 1);
      }
    };
    fill(0);
  };
  rec(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hlpos::combinat
