#pragma once

#include "hlpos/combinat/tableau.hpp"

#include <cstdint>

namespace hlpos::plactic {

using combinat::Tableau;
using combinat::Word;

// Schensted row insertion T <- x: x bumps the leftmost entry of row 1 that is
// strictly larger, the bumped entry is inserted into row 2, and so on.
Tableau row_insert(const Tableau& t, int x);
// Schensted column insertion x -> T: x bumps the topmost entry of column 1
// that is >= x, the bumped entry goes into column 2, and so on.
Tableau column_insert(int x, const Tableau& t);

// Row-inserts the letters of w from left to right into the empty tableau.
// This is the canonical representative of the plactic class of w.
Tableau insertion_tableau(const Word& w);

// Equality of insertion tableaux.
bool knuth_equivalent(const Word& u, const Word& v);

// Product in the plactic monoid: insertion tableau of w(a) w(b).
Tableau plactic_product(const Tableau& a, const Tableau& b);

// Bitmask of the entries of column 1 (bit i-1 for entry i).
std::uint32_t first_column_set(const Tableau& t);

}  // namespace hlpos::plactic
