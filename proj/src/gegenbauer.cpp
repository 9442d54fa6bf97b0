#include "gegenbauer.hpp"

#include <cassert>

namespace halfpot {

GegenbauerPoly gegenbauer(int k, const Rational& lambda) {
    if (k < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
    GegenbauerPoly p;
    p.degree = k;
    p.lambda = lambda;

    std::vector<Rational> prev{1};  // C_0 = 1
    if (k == 0) {
        p.coeffs = prev;
        return p;
    }
    std::vector<Rational> cur{0, 2 * lambda};  // C_1 = 2 lambda x
    for (int n = 2; n <= k; ++n) {
        // n C_n = 2 (n + lambda - 1) x C_{n-1} - (n + 2 lambda - 2) C_{n-2}
        std::vector<Rational> next(n + 1, Rational(0));
        Rational fa = 2 * (lambda + (n - 1));
        Rational fb = 2 * lambda + (n - 2);
        for (int j = 0; j < static_cast<int>(cur.size()); ++j)
            next[j + 1] += fa * cur[j];
        for (int j = 0; j < static_cast<int>(prev.size()); ++j)
            next[j] -= fb * prev[j];
        for (auto& c : next) c /= n;
        prev = std::move(cur);
        cur = std::move(next);
    }
    p.coeffs = std::move(cur);
    return p;
}

namespace {

// Assemble prefactor * r^rpow * s^spow * i^ipar * C(i x0 / r) as a real
// AxialExpr.  ipar is the parity class of the i-prefactor; i^(ipar + j) must
// be real for every nonzero polynomial coefficient j.
AxialExpr assemble(const Coefficient& prefactor, int rpow, int spow, int ipar,
                   const GegenbauerPoly& poly) {
    std::vector<AxialTerm> terms;
    for (int j = 0; j <= poly.degree; ++j) {
        if (poly.coeffs[j] == 0) continue;
        if ((ipar + j) % 2 != 0)
            throw std::logic_error("downstream closed form: residual imaginary part");
        int half = (ipar + j) / 2;
        Rational sign = (half % 2 == 0) ? 1 : -1;  // i^(ipar+j) = (-1)^((ipar+j)/2)
        Coefficient c = prefactor * (sign * poly.coeffs[j]);
        terms.push_back({c, TermKey{Atom::One, j, rpow - j, spow}});
    }
    return AxialExpr(std::move(terms));
}

}  // namespace

AxialExpr downstream_A(int k, int m) {
    if (k < 1) throw std::invalid_argument("downstream_A: k must be >= 1");
    if (m == 2) {
        // (-1)^{k+1} (1/2pi) k! (2k-1)!!/( (k+1)...(2k) ) r^k s^{-2k-1} i^k C_k^{-k}(i x0/r)
        Rational sign = (k % 2 == 0) ? -1 : 1;
        Rational q = sign * Rational(double_factorial(2 * k - 1)) *
                     Rational(factorial(k)) * Rational(factorial(k)) /
                     Rational(factorial(2 * k));
        Coefficient pre = Coefficient(q / 2, -1);
        return assemble(pre, k, -(2 * k + 1), k, gegenbauer(k, Rational(-k)));
    }
    if (m == 3) {
        // (-1)^{k+1} (1/pi^2) 2^{k-1} (k!)^2/( (k+2)...(2k+1) ) rho^k s^{-2k-2} i^k C_k^{-k-1/2}
        Rational sign = (k % 2 == 0) ? -1 : 1;
        Rational q = sign * pow2(k - 1) *
                     Rational(factorial(k)) * Rational(factorial(k)) *
                     Rational(factorial(k + 1)) / Rational(factorial(2 * k + 1));
        Coefficient pre = Coefficient(q, -2);
        return assemble(pre, k, -(2 * k + 2), k,
                        gegenbauer(k, Rational(-2 * k - 1, 2)));
    }
    throw std::invalid_argument("downstream_A: m must be 2 or 3");
}

AxialExpr downstream_B(int k, int m) {
    if (k < 1) throw std::invalid_argument("downstream_B: k must be >= 1");
    if (m == 2) {
        // (-1)^k (1/2pi) (k-1)! (2k-1)!!/( (k+2)...(2k) ) r^{k-1} x s^{-2k-1} i^{k-1} C_{k-1}^{-k};
        // the stored omega-density carries the extra factor r from x = r omega.
        Rational sign = (k % 2 == 0) ? 1 : -1;
        Rational q = sign * Rational(double_factorial(2 * k - 1)) *
                     Rational(factorial(k - 1)) * Rational(factorial(k + 1)) /
                     Rational(factorial(2 * k));
        Coefficient pre = Coefficient(q / 2, -1);
        return assemble(pre, k, -(2 * k + 1), k - 1, gegenbauer(k - 1, Rational(-k)));
    }
    if (m == 3) {
        Rational sign = (k % 2 == 0) ? 1 : -1;
        Rational q = sign * pow2(k - 1) *
                     Rational(factorial(k - 1)) * Rational(factorial(k)) *
                     Rational(factorial(k + 2)) / Rational(factorial(2 * k + 1));
        Coefficient pre = Coefficient(q, -2);
        return assemble(pre, k, -(2 * k + 2), k - 1,
                        gegenbauer(k - 1, Rational(-2 * k - 1, 2)));
    }
    throw std::invalid_argument("downstream_B: m must be 2 or 3");
}

}  // namespace halfpot
