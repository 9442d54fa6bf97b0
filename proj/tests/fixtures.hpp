#pragma once

// Transcribed closed forms used as test fixtures: the eight downstream rows
// and the 2pi A_3..A_6 tables for each dimension, plus the explicit B_1/B_2
// conjugates.  Everything is written as the exact term lists of the
// potentials themselves (the global 1/2pi resp. 1/pi^2 folded in).

#include "axial.hpp"

#include <vector>

namespace fixtures {

using halfpot::Atom;
using halfpot::AxialExpr;
using halfpot::AxialTerm;
using halfpot::Coefficient;
using halfpot::TermKey;

inline AxialTerm t(long long num, long long den, int pi, int a, int b, int alpha2,
                   Atom atom = Atom::One) {
    return {Coefficient::pi_power(num, den, pi), TermKey{atom, a, b, alpha2}};
}

// ---- downstream, m = 2 (each term q/(2 pi), B rows as omega-densities) ----

inline AxialExpr downstream_A_m2(int k) {
    switch (k) {
        case 1: return AxialExpr{t(1, 2, -1, 1, 0, -3)};
        case 2: return AxialExpr{t(-2, 2, -1, 2, 0, -5), t(1, 2, -1, 0, 2, -5)};
        case 3: return AxialExpr{t(6, 2, -1, 3, 0, -7), t(-9, 2, -1, 1, 2, -7)};
        case 4:
            return AxialExpr{t(-24, 2, -1, 4, 0, -9), t(72, 2, -1, 2, 2, -9),
                             t(-9, 2, -1, 0, 4, -9)};
    }
    throw std::out_of_range("fixture");
}

inline AxialExpr downstream_B_m2(int k) {
    switch (k) {
        case 1: return AxialExpr{t(-1, 2, -1, 0, 1, -3)};
        case 2: return AxialExpr{t(3, 2, -1, 1, 1, -5)};
        case 3: return AxialExpr{t(-12, 2, -1, 2, 1, -7), t(3, 2, -1, 0, 3, -7)};
        case 4: return AxialExpr{t(60, 2, -1, 3, 1, -9), t(-45, 2, -1, 1, 3, -9)};
    }
    throw std::out_of_range("fixture");
}

// ---- downstream, m = 3 (each term q/pi^2) ----------------------------------

inline AxialExpr downstream_A_m3(int k) {
    switch (k) {
        case 1: return AxialExpr{t(1, 1, -2, 1, 0, -4)};
        case 2: return AxialExpr{t(-3, 1, -2, 2, 0, -6), t(1, 1, -2, 0, 2, -6)};
        case 3: return AxialExpr{t(12, 1, -2, 3, 0, -8), t(-12, 1, -2, 1, 2, -8)};
        case 4:
            return AxialExpr{t(-60, 1, -2, 4, 0, -10), t(120, 1, -2, 2, 2, -10),
                             t(-12, 1, -2, 0, 4, -10)};
    }
    throw std::out_of_range("fixture");
}

inline AxialExpr downstream_B_m3(int k) {
    switch (k) {
        case 1: return AxialExpr{t(-1, 1, -2, 0, 1, -4)};
        case 2: return AxialExpr{t(4, 1, -2, 1, 1, -6)};
        case 3: return AxialExpr{t(-20, 1, -2, 2, 1, -8), t(4, 1, -2, 0, 3, -8)};
        case 4: return AxialExpr{t(120, 1, -2, 3, 1, -10), t(-72, 1, -2, 1, 3, -10)};
    }
    throw std::out_of_range("fixture");
}

// ---- upstream tables, m = 2: A_j with terms q/(2 pi) ------------------------

inline AxialExpr upstream_A_m2(int j) {
    switch (j) {
        case 1: return AxialExpr{t(-1, 2, -1, 0, 0, 0, Atom::Log)};
        case 2:
            return AxialExpr{t(-1, 2, -1, 1, 0, 0, Atom::Log), t(1, 2, -1, 0, 0, 1)};
        case 3:
            return AxialExpr{t(-1, 4, -1, 2, 0, 0, Atom::Log),
                             t(1, 8, -1, 0, 2, 0, Atom::Log), t(3, 8, -1, 1, 0, 1),
                             t(-1, 8, -1, 0, 2, 0)};
        case 4:
            return AxialExpr{t(-1, 12, -1, 3, 0, 0, Atom::Log),
                             t(1, 8, -1, 1, 2, 0, Atom::Log),
                             t(11, 72, -1, 2, 0, 1), t(-1, 18, -1, 0, 2, 1),
                             t(-1, 8, -1, 1, 2, 0)};
        case 5:
            return AxialExpr{t(-1, 48, -1, 4, 0, 0, Atom::Log),
                             t(1, 16, -1, 2, 2, 0, Atom::Log),
                             t(-1, 128, -1, 0, 4, 0, Atom::Log),
                             t(25, 576, -1, 3, 0, 1), t(-55, 1152, -1, 1, 2, 1),
                             t(-1, 16, -1, 2, 2, 0), t(3, 256, -1, 0, 4, 0)};
        case 6:
            return AxialExpr{t(-1, 240, -1, 5, 0, 0, Atom::Log),
                             t(1, 48, -1, 3, 2, 0, Atom::Log),
                             t(-1, 128, -1, 1, 4, 0, Atom::Log),
                             t(137, 14400, -1, 4, 0, 1),
                             t(-607, 28800, -1, 2, 2, 1), t(1, 450, -1, 0, 4, 1),
                             t(-1, 48, -1, 3, 2, 0), t(3, 256, -1, 1, 4, 0)};
    }
    throw std::out_of_range("fixture");
}

// ---- upstream tables, m = 3: A_j with terms q/(2 pi^2), QUAT = r^-1 arctan --

inline AxialExpr upstream_A_m3(int j) {
    switch (j) {
        case 1: return AxialExpr{t(1, 2, -2, 0, -1, 0, Atom::Arctan)};
        case 2:
            return AxialExpr{t(1, 2, -2, 1, -1, 0, Atom::Arctan),
                             t(1, 2, -2, 0, 0, 0, Atom::LnSqrt)};
        case 3:
            return AxialExpr{t(1, 4, -2, 2, -1, 0, Atom::Arctan),
                             t(-1, 4, -2, 0, 1, 0, Atom::Arctan),
                             t(1, 2, -2, 1, 0, 0, Atom::LnSqrt),
                             t(-1, 4, -2, 1, 0, 0)};
        case 4:
            return AxialExpr{t(1, 12, -2, 3, -1, 0, Atom::Arctan),
                             t(-1, 4, -2, 1, 1, 0, Atom::Arctan),
                             t(1, 4, -2, 2, 0, 0, Atom::LnSqrt),
                             t(-1, 12, -2, 0, 2, 0, Atom::LnSqrt),
                             t(-5, 24, -2, 2, 0, 0), t(5, 72, -2, 0, 2, 0)};
        case 5:
            return AxialExpr{t(1, 48, -2, 4, -1, 0, Atom::Arctan),
                             t(-1, 8, -2, 2, 1, 0, Atom::Arctan),
                             t(1, 48, -2, 0, 3, 0, Atom::Arctan),
                             t(1, 12, -2, 3, 0, 0, Atom::LnSqrt),
                             t(-1, 12, -2, 1, 2, 0, Atom::LnSqrt),
                             t(-13, 144, -2, 3, 0, 0), t(13, 144, -2, 1, 2, 0)};
        case 6:
            return AxialExpr{t(1, 240, -2, 5, -1, 0, Atom::Arctan),
                             t(-1, 24, -2, 3, 1, 0, Atom::Arctan),
                             t(1, 48, -2, 1, 3, 0, Atom::Arctan),
                             t(1, 48, -2, 4, 0, 0, Atom::LnSqrt),
                             t(-1, 24, -2, 2, 2, 0, Atom::LnSqrt),
                             t(1, 240, -2, 0, 4, 0, Atom::LnSqrt),
                             t(-77, 2880, -2, 4, 0, 0), t(77, 1440, -2, 2, 2, 0),
                             t(-77, 14400, -2, 0, 4, 0)};
    }
    throw std::out_of_range("fixture");
}

// ---- the explicit conjugates B_0..B_2 printed in the text ------------------

inline AxialExpr pivot_B_m2() {
    return AxialExpr{t(1, 2, -1, 0, -1, 0), t(-1, 2, -1, 1, -1, -1)};
}

inline AxialExpr pivot_B_m3() {
    return AxialExpr{t(1, 2, -2, 0, -2, 0, Atom::Arctan), t(-1, 2, -2, 1, -1, -2)};
}

inline AxialExpr upstream_B1_m2() {
    // (1/2pi) (x / r^2)(x0 - s), as an omega-density
    return AxialExpr{t(1, 2, -1, 1, -1, 0), t(-1, 2, -1, 0, -1, 1)};
}

inline AxialExpr upstream_B2_m2() {
    // (x / 4pi)(1/2 - x0 (s - x0)/r^2 - LOG), as an omega-density
    return AxialExpr{t(1, 8, -1, 0, 1, 0), t(-1, 4, -1, 1, -1, 1),
                     t(1, 4, -1, 2, -1, 0), t(-1, 4, -1, 0, 1, 0, Atom::Log)};
}

inline AxialExpr upstream_B1_m3() {
    // (1/2pi^2)(x / rho^2)((x0/rho) arctan(rho/x0) - 1), as an omega-density
    return AxialExpr{t(1, 2, -2, 1, -2, 0, Atom::Arctan), t(-1, 2, -2, 0, -1, 0)};
}

inline AxialExpr upstream_B2_m3() {
    // (1/4pi^2)((x/rho^3)(x0^2+rho^2) arctan(rho/x0) - x x0 / rho^2)
    return AxialExpr{t(1, 4, -2, 0, -2, 2, Atom::Arctan), t(-1, 4, -2, 1, -1, 0)};
}

// ---- the twelve verbatim LaTeX rows for m = 2 -------------------------------

inline std::vector<std::string> latex_rows_m2() {
    return {
        "A_{-1} = \\frac{1}{2\\pi} \\, \\frac{x_0}{(x_0^2 + r^2)^{3/2}}",
        "A_{-2} = \\frac{1}{2\\pi} \\, \\frac{-2 x_0^2 + r^2}{(x_0^2 + r^2)^{5/2}}",
        "A_{-3} = \\frac{1}{2\\pi} \\, \\frac{6 x_0^3 - 9 x_0 r^2}{(x_0^2 + "
        "r^2)^{7/2}}",
        "A_{-4} = \\frac{1}{2\\pi} \\, \\frac{-24 x_0^4 + 72 x_0^2 r^2 - 9 "
        "r^4}{(x_0^2 + r^2)^{9/2}}",
        "B_{-1} = - \\frac{1}{2\\pi} \\, \\frac{\\underline{x}}{(x_0^2 + "
        "r^2)^{3/2}}",
        "B_{-2} = \\frac{1}{2\\pi} \\, \\frac{3 x_0 \\underline{x}}{(x_0^2 + "
        "r^2)^{5/2}}",
        "B_{-3} = - \\frac{1}{2\\pi} \\, \\frac{(12 x_0^2 -3 r^2) "
        "\\underline{x}}{(x_0^2 + r^2)^{7/2}}",
        "B_{-4} = \\frac{1}{2\\pi} \\, \\frac{(60 x_0^3 - 45 x_0 r^2) "
        "\\underline{x}}{(x_0^2 + r^2)^{9/2}}",
        "2\\pi A_3(x_0,\\underline{x}) = (-\\frac{1}{2} x_0^2 + \\frac{1}{4} "
        "r^2) LOG + \\frac{3}{4} x_0 SQRT - \\frac{1}{4} r^2",
        "2\\pi A_4(x_0,\\underline{x}) = (-\\frac{1}{6} x_0^3 + \\frac{1}{4} r^2 "
        "x_0) LOG + (\\frac{11}{36} x_0^2 - \\frac{1}{9} r^2) SQRT - \\frac{1}{4} "
        "r^2 x_0",
        "2\\pi A_5(x_0,\\underline{x}) = (-\\frac{1}{24} x_0^4 + \\frac{1}{8} "
        "r^2 x_0^2 - \\frac{1}{64} r^4) LOG + (\\frac{25}{288} x_0^3 - "
        "\\frac{55}{576} r^2 x_0) SQRT - \\frac{1}{8} r^2 x_0^2 + \\frac{3}{128} "
        "r^4",
        "2\\pi A_6(x_0,\\underline{x}) = (-\\frac{1}{120} x_0^5 + \\frac{1}{24} "
        "r^2 x_0^3 - \\frac{1}{64} r^4 x_0) LOG + (\\frac{137}{7200} x_0^4 - "
        "\\frac{607}{14400} r^2 x_0^2 + \\frac{1}{225} r^4) SQRT - \\frac{1}{24} "
        "r^2 x_0^3 + \\frac{3}{128} r^4 x_0",
    };
}

// Whitespace-insensitive comparison key: spacing macros and blanks removed.
inline std::string squash(std::string s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size() &&
            (s[i + 1] == ',' || s[i + 1] == ';' || s[i + 1] == '!' || s[i + 1] == ' ')) {
            ++i;
            continue;
        }
        if (s[i] == ' ' || s[i] == '\t' || s[i] == '\n') continue;
        out += s[i];
    }
    return out;
}

}  // namespace fixtures
