#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace halfpot {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
// cpp_rational maintains exactly these invariants.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& q);
double to_double(const Rational& q);

// n!! with (-1)!! = 0!! = 1.  Rejects n < -1.
BigInt double_factorial(long n);

BigInt factorial(long n);

BigInt pow2(long n);

// H_k = sum_{n=1}^k 1/n, H_0 = 0.
Rational harmonic_number(long k);

// Exact element of Q[pi, pi^-1]: a sparse Laurent polynomial in the formal
// transcendental symbol pi.  Transcendence of pi makes equality of these
// values decidable: sum q_n pi^n = 0 iff every q_n = 0.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(const Rational& q, int pi_exponent = 0);

    static Coefficient integer(long long n) { return Coefficient(make_rational(n)); }
    static Coefficient rational(long long num, long long den) {
        return Coefficient(make_rational(num, den));
    }
    // q = num/den times pi^n
    static Coefficient pi_power(long long num, long long den, int n) {
        return Coefficient(make_rational(num, den), n);
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Coefficient&) const = default;

    Coefficient operator-() const;
    Coefficient operator+(const Coefficient& rhs) const;
    Coefficient operator-(const Coefficient& rhs) const;
    Coefficient operator*(const Coefficient& rhs) const;
    Coefficient& operator+=(const Coefficient& rhs);
    Coefficient& operator-=(const Coefficient& rhs);
    Coefficient& operator*=(const Coefficient& rhs);

    Coefficient operator*(const Rational& q) const;
    Coefficient operator/(const Rational& q) const;

    // Map from pi exponent to nonzero rational factor.
    const std::map<int, Rational>& terms() const { return terms_; }

    double to_double() const;

    // Canonical rendering "q1*pi^n1 + q2*pi^n2" with exponents descending.
    std::string to_string() const;

private:
    std::map<int, Rational> terms_;
};

inline Coefficient operator*(const Rational& q, const Coefficient& c) { return c * q; }

}  // namespace halfpot
