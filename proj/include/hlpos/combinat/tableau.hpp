#pragma once

#include "hlpos/combinat/gt_array.hpp"
#include "hlpos/combinat/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hlpos::combinat {

using Word = std::vector<int>;

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase, row lengths weakly decrease, entries positive.
class Tableau {
 public:
  Tableau() = default;
  // Throws std::invalid_argument when a tableau rule is broken.
  explicit Tableau(std::vector<std::vector<int>> rows);

  // Rows separated by '/', entries either single digits ("1123/24") or
  // comma separated ("1,1,12/2,13").
  static Tableau parse(std::string_view text);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int max_entry() const;
  // 0-based; j-th column read top to bottom.
  std::vector<int> column(std::size_t j) const;
  // content[i] = number of entries equal to i+1, for i < n.
  std::vector<int> content(int n) const;

  std::string to_string() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Fills lambda^(j)/lambda^(j-1) with j.
Tableau gt_to_tableau(const GTArray& g);
// Level j is the shape of the entries <= j. Throws std::invalid_argument if
// an entry exceeds n.
GTArray tableau_to_gt(const Tableau& t, int n);

// Bottom row first, each row left to right.
Word reading_word(const Tableau& t);

// Digits concatenated when every letter is < 10, otherwise comma separated.
std::string word_to_string(const Word& w);
// Inverse of word_to_string; letters must be positive.
Word parse_word(std::string_view text);

}  // namespace hlpos::combinat
