#include "hlpos/plactic/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlpos::plactic {

Tableau row_insert(const Tableau& t, int x) {
  if (x < 1) throw std::invalid_argument("letters must be positive");
  auto rows = t.rows();
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return Tableau(std::move(rows));
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
  return Tableau(std::move(rows));
}

Tableau column_insert(int x, const Tableau& t) {
  if (x < 1) throw std::invalid_argument("letters must be positive");
  auto rows = t.rows();
  for (std::size_t j = 0;; ++j) {
    std::size_t i = 0;
    while (i < rows.size() && j < rows[i].size() && rows[i][j] < x) ++i;
    if (i == rows.size() || j >= rows[i].size()) {
      // new box at the bottom of column j
      if (i == rows.size()) rows.emplace_back();
      rows[i].push_back(x);
      return Tableau(std::move(rows));
    }
    std::swap(rows[i][j], x);
  }
}

Tableau insertion_tableau(const Word& w) {
  Tableau t;
  for (int x : w) t = row_insert(t, x);
  return t;
}

bool knuth_equivalent(const Word& u, const Word& v) { return insertion_tableau(u) == insertion_tableau(v); }

Tableau plactic_product(const Tableau& a, const Tableau& b) {
  Tableau t = a;
  for (int x : combinat::reading_word(b)) t = row_insert(t, x);
  return t;
}

std::uint32_t first_column_set(const Tableau& t) {
  std::uint32_t s = 0;
  for (int x : t.column(0)) s |= 1u << (x - 1);
  return s;
}

}  // namespace hlpos::plactic
