#pragma once

#include <vector>

#include "admkit/multipoly.hpp"
#include "admkit/tpoly.hpp"

namespace admkit {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// t-adic valuations of the elementary divisors of a square matrix over Q[t],
// sorted ascending, infinite entries last. For every r >= 1 the corank of M
// modulo t^r equals the number of entries >= r.
//
// Fraction-free Bareiss elimination; pivots chosen by minimal t-valuation,
// ties broken by lowest degree, then column, then row. Over the localization
// at (t) the successive pivot valuations are the partial sums of the divisor
// valuations, so each divisor is the difference of consecutive pivots.
std::vector<TValuation> smith_t_valuations(Matrix<TPoly> m);

// Number of elementary divisors with valuation >= r (= corank of M mod t^r).
long corank_mod_tr(const std::vector<TValuation>& vals, long r);

// Exact determinants (fraction-free Bareiss, sign tracked through swaps).
TPoly det(Matrix<TPoly> m);
MultiPoly det(Matrix<MultiPoly> m);

// Exact determinant of a bivariate polynomial matrix by specializing one
// variable at integer nodes (their count driven by a sound row-sum degree
// bound), running univariate fraction-free elimination per node, and Newton
// interpolation of the coefficients. Much faster than symbolic Bareiss on
// larger matrices.
MultiPoly det_bivariate(const Matrix<MultiPoly>& m);

// Decides det(M) == s * F for some nonzero rational s, exactly, without
// expanding det(M): both sides are evaluated on an integer grid whose side
// lengths exceed sound per-variable degree bounds of det(M) - s*F, so grid
// agreement is equivalent to polynomial identity. M must be bivariate.
bool det_equals_up_to_scalar(const Matrix<MultiPoly>& m, const MultiPoly& f,
                             Rat* scalar = nullptr);

// Rank of a rational matrix (not necessarily square).
long rank(Matrix<Rat> m);

}  // namespace admkit
