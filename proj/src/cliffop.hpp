#pragma once

#include "axial.hpp"
#include "boundary.hpp"

namespace halfpot {

// Conjugate harmonic pair: the monogenic potential is C = A/2 + e0bar * B/2
// where A = A(x0, r) is scalar and B = omega * g(x0, r) is Clifford
// vector-valued; B stores the full density g, so the paper's B(x0, x) equals
// omega * B here.
struct PotentialPair {
    int m = 2;  // boundary dimension, ambient half-space is R^{m+1}
    AxialExpr A;
    AxialExpr B;

    bool operator==(const PotentialPair&) const = default;
    bool is_zero() const { return A.is_zero() && B.is_zero(); }
};

// dirac applied to a scalar axial function: dirac f = omega * d_r f.
// Returns the omega-density.
AxialExpr dirac_scalar(const AxialExpr& f);

// dirac applied to omega * g: a scalar, -(d_r g + (m-1) g / r).
AxialExpr dirac_vector(const AxialExpr& g, int m);

// Generalized Cauchy-Riemann operator D = (d_x0 + e0bar dirac)/2 and its
// conjugate Dbar = (d_x0 - e0bar dirac)/2 acting on pairs.  Sign bookkeeping
// is fixed by the requirement Dbar C_k = C_{k-1} with
// A_{k-1} = d_x0 A_k = -dirac B_k and B_{k-1} = d_x0 B_k = -dirac A_k.
PotentialPair apply_D(const PotentialPair& p);
PotentialPair apply_Dbar(const PotentialPair& p);

// Delta_{m+1} on a scalar axial function.
AxialExpr laplacian_scalar(const AxialExpr& f, int m);
// Delta_{m+1} on omega * g, returned as the omega-density (the omega
// direction contributes the extra -(m-1) g / r^2 term).
AxialExpr laplacian_vector(const AxialExpr& g, int m);

}  // namespace halfpot
