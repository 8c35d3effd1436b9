#pragma once

#include "hlpos/combinat/partition.hpp"
#include "hlpos/exactalg/multipoly.hpp"

namespace hlpos::symfunc {

using exactalg::MultiPoly;
using combinat::Partition;

// Symmetric polynomials live in standard_env(n) = (t, a1, ..., an) as plain
// MultiPolys; symmetry in the a-variables is a checkable property, not a
// separate type.
using SymPoly = MultiPoly;

// a_i as a polynomial (1-based i).
MultiPoly a_var(int i, int n);
MultiPoly t_var(int n);
MultiPoly constant(const exactalg::Rational& c, int n);

// h_r: sum over weakly increasing index tuples; h_0 = 1, h_r = 0 for r < 0.
SymPoly complete_h(int r, int n);
// e_r: sum over strictly increasing index tuples; 0 for r < 0 or r > n.
SymPoly elementary_e(int r, int n);
// m_lambda: sum of the distinct permutations of a^lambda.
SymPoly monomial_m(const Partition& lambda, int n);

// det[h_{lambda_i - i + j}] expanded over permutations.
SymPoly schur_jacobi_trudi(const Partition& lambda, int n);
// Sum of a^content over semistandard tableaux of shape lambda.
SymPoly schur_tableau_sum(const Partition& lambda, int n);

// Invariance under every adjacent transposition a_i <-> a_{i+1}.
bool is_symmetric(const MultiPoly& p, int n);

// a^exponents (exponents[i] is the power of a_{i+1}).
MultiPoly a_monomial(const std::vector<int>& exponents, int n);

}  // namespace hlpos::symfunc
