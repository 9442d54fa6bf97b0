#pragma once

#include "axial.hpp"

#include <vector>

namespace halfpot {

// Gegenbauer polynomial C_k^lambda with exact rational coefficients.  Only
// powers of the same parity as k are nonzero.  The parameter may be any
// rational, including the negative (half-)integers the downstream closed
// forms need; the three-term recurrence only ever divides by the degree, so
// it stays well-defined there.
struct GegenbauerPoly {
    int degree = 0;
    Rational lambda;
    std::vector<Rational> coeffs;  // powers x^0 .. x^degree

    Rational at(int power) const { return coeffs.at(power); }
};

GegenbauerPoly gegenbauer(int k, const Rational& lambda);

// Downstream potentials A_{-k} and the omega-density of B_{-k} for the
// boundary dimension m in {2, 3}, k >= 1, via the Gegenbauer closed forms.
// The i-powers of the argument i*x0/r cancel against the polynomial parity;
// the construction asserts this, keeping the result real.
AxialExpr downstream_A(int k, int m);
AxialExpr downstream_B(int k, int m);

}  // namespace halfpot
