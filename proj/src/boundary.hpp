#pragma once

#include "axial.hpp"

namespace halfpot {

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Radial monomial sum c * r^b or c * r^b * ln r, the regular part of a
// distribution on R^m restricted to r > 0.  The finite-part (Fp) or
// principal-value (Pv) reading is implicit for exponents b <= -m.
class RadialDensity {
public:
    struct Key {
        int b = 0;
        bool log = false;
        auto operator<=>(const Key&) const = default;
    };

    RadialDensity() = default;

    static RadialDensity term(const Coefficient& c, int b, bool log = false);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Coefficient>& terms() const { return terms_; }
    bool operator==(const RadialDensity&) const = default;

    RadialDensity operator+(const RadialDensity& rhs) const;
    RadialDensity operator-() const;
    RadialDensity scaled(const Coefficient& c) const;
    RadialDensity mul_r(int db) const;

    std::string to_string() const;

private:
    std::map<Key, Coefficient> terms_;
};

// d/dr on radial densities (for the boundary Dirac operator).
RadialDensity diff_r(const RadialDensity& d);

// Regular part of lim_{x0 -> 0+}: s -> r, Log -> ln r, LnSqrt -> ln r,
// Arctan -> pi/2; every term with a positive power of x0 vanishes.
RadialDensity limit_x0_to_zero(const AxialExpr& e);

// Radial distribution on R^m: regular scalar and omega-valued vector parts
// plus a formal singular ledger of c * (-dirac)^k delta atoms.  Even k sit on
// the scalar side, odd k on the vector side.
struct BoundaryDensity {
    int m = 2;
    RadialDensity scalar;
    RadialDensity vector;                  // density g of the omega-part, value = omega * g
    std::map<int, Coefficient> singular;   // k -> coefficient of (-dirac)^k delta

    bool operator==(const BoundaryDensity&) const = default;
    bool is_zero() const { return scalar.is_zero() && vector.is_zero() && singular.empty(); }
};

BoundaryDensity singular_delta(int m, int k, const Coefficient& c);

// -dirac on the boundary: scalar f -> omega-density -f', vector density g ->
// scalar g' + (m-1) g / r, singular (-dirac)^k delta -> (-dirac)^{k+1} delta.
// Does not generate the delta corrections that arise from differentiating
// finite-part distributions across the origin.
BoundaryDensity radial_dirac_boundary(const BoundaryDensity& d);

}  // namespace halfpot
