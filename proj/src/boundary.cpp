#include "boundary.hpp"

#include <sstream>

namespace halfpot {

RadialDensity RadialDensity::term(const Coefficient& c, int b, bool log) {
    RadialDensity d;
    if (!c.is_zero()) d.terms_[{b, log}] = c;
    return d;
}

RadialDensity RadialDensity::operator+(const RadialDensity& rhs) const {
    RadialDensity out = *this;
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

RadialDensity RadialDensity::operator-() const {
    RadialDensity out;
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

RadialDensity RadialDensity::scaled(const Coefficient& c) const {
    RadialDensity out;
    if (c.is_zero()) return out;
    for (const auto& [k, tc] : terms_) out.terms_[k] = tc * c;
    return out;
}

RadialDensity RadialDensity::mul_r(int db) const {
    RadialDensity out;
    for (const auto& [k, c] : terms_) out.terms_[{k.b + db, k.log}] = c;
    return out;
}

std::string RadialDensity::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.b != 0) os << "*r^" << k.b;
        if (k.log) os << "*ln(r)";
    }
    return os.str();
}

RadialDensity diff_r(const RadialDensity& d) {
    RadialDensity out;
    for (const auto& [k, c] : d.terms()) {
        if (k.b != 0)
            out = out + RadialDensity::term(c * Rational(k.b), k.b - 1, k.log);
        if (k.log) out = out + RadialDensity::term(c, k.b - 1, false);
    }
    return out;
}

RadialDensity limit_x0_to_zero(const AxialExpr& e) {
    RadialDensity out;
    for (const auto& [k, c] : e.terms()) {
        if (k.a < 0)
            throw LimitError("limit does not exist in this algebra: negative power of x0");
        if (k.a > 0) continue;  // atoms stay finite at x0 = 0, so x0^a kills the term
        int b = k.b + k.alpha2;
        switch (k.atom) {
            case Atom::One:
                out = out + RadialDensity::term(c, b, false);
                break;
            case Atom::Log:
            case Atom::LnSqrt:
                out = out + RadialDensity::term(c, b, true);
                break;
            case Atom::Arctan:  // principal branch: arctan(r/x0) -> pi/2 for r > 0
                out = out + RadialDensity::term(c * Coefficient::pi_power(1, 2, 1), b, false);
                break;
        }
    }
    return out;
}

BoundaryDensity singular_delta(int m, int k, const Coefficient& c) {
    BoundaryDensity d;
    d.m = m;
    if (!c.is_zero()) d.singular[k] = c;
    return d;
}

BoundaryDensity radial_dirac_boundary(const BoundaryDensity& d) {
    BoundaryDensity out;
    out.m = d.m;
    out.vector = -diff_r(d.scalar);
    out.scalar = diff_r(d.vector) + d.vector.mul_r(-1).scaled(Coefficient::integer(d.m - 1));
    for (const auto& [k, c] : d.singular) out.singular[k + 1] = c;
    return out;
}

}  // namespace halfpot
