#pragma once

#include <vector>

#include "qplab/polynomial.hpp"

namespace qplab {

// Power sums of the roots, computed from the coefficients (no root
// isolation): P_0 = deg p, then Newton's identities. Requires deg >= 1.
std::vector<Rat> newton_sums(const Polynomial& p, long upto);

// Hankel matrix H(p) of Newton sums P_0 .. P_{2s-2}, s = deg p.
std::vector<std::vector<Rat>> hankel_matrix(const Polynomial& p);

// Determinants of the leading principal minors 1x1 .. sxs of H(p).
std::vector<Rat> hankel_minor_dets(const Polynomial& p);

// Exact PSD test for H(p): every principal minor is >= 0. Exponential in
// s; guarded to s <= 10, ample for the low-degree cross-checks.
bool hankel_psd(const Polynomial& p);

Rat det(std::vector<std::vector<Rat>> m);

// Number of real roots counted via Sturm chains; exact. When
// count_multiplicity is set, multiplicities are summed by peeling
// gcd(p, p') repeatedly. Rejects the zero polynomial.
long sturm_real_root_count(const Polynomial& p, bool count_multiplicity);

// Real roots in the open interval (0, +inf); same multiplicity handling.
long positive_root_count(const Polynomial& p, bool count_multiplicity);

// All complex roots real (by Sturm count, with multiplicity).
bool hyperbolic_by_sturm(const Polynomial& p);

// Hermite's criterion: H(p) positive semidefinite. Low-degree companion
// check for hyperbolic_by_sturm.
bool hyperbolic_by_hankel(const Polynomial& p);

}  // namespace qplab
