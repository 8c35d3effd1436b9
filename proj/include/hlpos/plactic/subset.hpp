#pragma once

#include "hlpos/combinat/partition.hpp"
#include "hlpos/combinat/tableau.hpp"
#include "hlpos/exactalg/multipoly.hpp"
#include "hlpos/exactalg/sparse_operator.hpp"

#include <cstdint>
#include <string>

namespace hlpos::plactic {

using combinat::Partition;
using combinat::Word;
using exactalg::Exec;
using exactalg::MultiPoly;

// Subset of {1..n}; bit i-1 set iff i is in the set.
using SubsetState = std::uint32_t;
// Linear operator on the 2^n subsets, coefficients in standard_env(n).
using SubsetOperator = exactalg::SparseOperator<MultiPoly>;

// i.S = S if i in S; S + {i} if S has nothing above i; otherwise
// S + {i} - {min(S & {i+1..n})}.
SubsetState subset_action(int i, SubsetState s, int n);
// The word i_1 ... i_r acts as i_1.(i_2.(...(i_r.S))).
SubsetState word_action(const Word& w, SubsetState s, int n);

// Letters of S in decreasing order: the reading word of S as one column.
Word column_word(SubsetState s, int n);
std::string subset_to_string(SubsetState s, int n);  // "{1,3}"

// H_r = sum over i_1 <= ... <= i_r of a_{i_1}...a_{i_r} (i_1 ... i_r);
// H_0 = Id, H_r = 0 for r < 0.
SubsetOperator h_r_operator(int r, int n);

// det[H_{lambda_i - i + j}] expanded over permutations, products composed in
// row order.
SubsetOperator plactic_schur_operator(const Partition& lambda, int n, Exec exec = Exec::parallel);
// Same operator from the tableau sum: column S collects a^content(L) times
// the first column of the insertion tableau of w(L) followed by the column
// word of S, over tableaux L of shape lambda. Columns are built in parallel
// under Exec::parallel.
SubsetOperator plactic_schur_tableau_operator(const Partition& lambda, int n, Exec exec = Exec::parallel);

// Column S of plactic_schur_operator.
SubsetOperator::Column plactic_schur_action(const Partition& lambda, SubsetState s, int n);

}  // namespace hlpos::plactic
