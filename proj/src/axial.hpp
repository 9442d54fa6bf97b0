#pragma once

#include "exact.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace halfpot {

// Transcendental atoms of the axially symmetric term algebra on the open
// quadrant x0 > 0, r > 0.  With s = sqrt(x0^2 + r^2):
//   One    : 1
//   Log    : ln(x0 + s)
//   Arctan : arctan(r / x0)
//   LnSqrt : ln(s)
enum class Atom : std::uint8_t { One, Log, Arctan, LnSqrt };

const char* atom_name(Atom a);

// A term denotes c * x0^a * r^b * s^alpha2 * atom, where alpha2 is the
// integer exponent of s (the half-integer (x0^2+r^2)-exponent is alpha2/2).
struct TermKey {
    Atom atom = Atom::One;
    int a = 0;       // power of x0, always >= 0
    int b = 0;       // Laurent power of r
    int alpha2 = 0;  // power of s = sqrt(x0^2+r^2)

    auto operator<=>(const TermKey&) const = default;
};

struct AxialTerm {
    Coefficient c;
    TermKey key;
};

// Canonical-form expression: a sum of AxialTerms, normalized so that within
// each (atom, alpha2-parity) group every term carries the same alpha2
// (i.e. the group is N(x0,r) * (x0^2+r^2)^d * s^sigma with sigma in {0,1})
// and the numerator N is not divisible by x0^2 + r^2.  The reduction
// s^2 = x0^2 + r^2 makes this normal form unique, so equality of canonical
// forms decides equality of the functions they denote.
class AxialExpr {
public:
    AxialExpr() = default;
    AxialExpr(std::initializer_list<AxialTerm> terms);
    explicit AxialExpr(std::vector<AxialTerm> terms);

    static AxialExpr term(const Coefficient& c, int a, int b, int alpha2,
                          Atom atom = Atom::One);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<TermKey, Coefficient>& terms() const { return terms_; }

    bool operator==(const AxialExpr&) const = default;

    AxialExpr operator+(const AxialExpr& rhs) const;
    AxialExpr operator-(const AxialExpr& rhs) const;
    AxialExpr operator-() const;
    AxialExpr& operator+=(const AxialExpr& rhs);

    AxialExpr scaled(const Coefficient& c) const;
    // Multiply by the monomial x0^da * r^db * s^dalpha2.  da may drive a
    // power of x0 negative only transiently; the result must satisfy a >= 0.
    AxialExpr mul_monomial(const Coefficient& c, int da, int db, int dalpha2) const;

private:
    friend AxialExpr diff_x0(const AxialExpr&);
    friend AxialExpr diff_r(const AxialExpr&);

    std::map<TermKey, Coefficient> terms_;
};

// Exact partial derivatives, closed on the term algebra.
AxialExpr diff_x0(const AxialExpr& e);
AxialExpr diff_r(const AxialExpr& e);

}  // namespace halfpot
