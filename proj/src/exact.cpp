#include "exact.hpp"

#include <cmath>
#include <sstream>

namespace halfpot {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
        os << "/" << boost::multiprecision::denominator(q);
    return os.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
    BigInt p = 1;
    for (long k = n; k >= 2; k -= 2) p *= k;
    return p;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt p = 1;
    for (long k = 2; k <= n; ++k) p *= k;
    return p;
}

BigInt pow2(long n) {
    if (n < 0) throw std::invalid_argument("pow2: n must be >= 0");
    return BigInt(1) << n;
}

Rational harmonic_number(long k) {
    if (k < 0) throw std::invalid_argument("harmonic_number: k must be >= 0");
    Rational h = 0;
    for (long n = 1; n <= k; ++n) h += Rational(BigInt(1), BigInt(n));
    return h;
}

Coefficient::Coefficient(const Rational& q, int pi_exponent) {
    if (q != 0) terms_[pi_exponent] = q;
}

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto& [n, q] : terms_) out.terms_[n] = -q;
    return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
    for (const auto& [n, q] : rhs.terms_) {
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_.emplace(n, q);
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) { return *this += -rhs; }

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
    *this = *this * rhs;
    return *this;
}

Coefficient Coefficient::operator+(const Coefficient& rhs) const {
    Coefficient out = *this;
    out += rhs;
    return out;
}

Coefficient Coefficient::operator-(const Coefficient& rhs) const {
    Coefficient out = *this;
    out -= rhs;
    return out;
}

Coefficient Coefficient::operator*(const Coefficient& rhs) const {
    Coefficient out;
    for (const auto& [n1, q1] : terms_)
        for (const auto& [n2, q2] : rhs.terms_) out += Coefficient(q1 * q2, n1 + n2);
    return out;
}

Coefficient Coefficient::operator*(const Rational& q) const {
    Coefficient out;
    if (q == 0) return out;
    for (const auto& [n, c] : terms_) out.terms_[n] = c * q;
    return out;
}

Coefficient Coefficient::operator/(const Rational& q) const {
    if (q == 0) throw std::invalid_argument("Coefficient: division by zero");
    return *this * Rational(boost::multiprecision::denominator(q),
                            boost::multiprecision::numerator(q));
}

double Coefficient::to_double() const {
    double v = 0.0;
    for (const auto& [n, q] : terms_) v += halfpot::to_double(q) * std::pow(M_PI, n);
    return v;
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational q = it->second;
        if (first) {
            first = false;
            if (q < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        os << halfpot::to_string(q) << "*pi^" << it->first;
    }
    return os.str();
}

}  // namespace halfpot
