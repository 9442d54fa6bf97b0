#include "axial.hpp"

#include <utility>

namespace halfpot {

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::One: return "one";
        case Atom::Log: return "log";
        case Atom::Arctan: return "arctan";
        case Atom::LnSqrt: return "lnsq";
    }
    return "?";
}

namespace {

// Numerator of one (atom, sigma) group: map (a, b) -> coefficient, a >= 0.
using Numerator = std::map<std::pair<int, int>, Coefficient>;

void num_add(Numerator& n, int a, int b, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = n.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) n.erase(it);
    }
}

// Divide the numerator by (x0^2 + r^2) if it divides exactly.  Long division
// in x0; the divisor is monic in x0 so this works over the coefficient ring.
bool try_divide_s2(Numerator& n) {
    if (n.empty()) return false;
    Numerator work = n;
    Numerator quotient;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        int a = it->first.first;
        if (a < 2) break;
        int b = it->first.second;
        Coefficient lead = it->second;
        work.erase(it);
        num_add(quotient, a - 2, b, lead);
        num_add(work, a - 2, b + 2, -lead);
    }
    if (!work.empty()) return false;
    n = std::move(quotient);
    return true;
}

BigInt binomial(int n, int k) {
    BigInt v = 1;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

}  // namespace

AxialExpr::AxialExpr(std::initializer_list<AxialTerm> terms)
    : AxialExpr(std::vector<AxialTerm>(terms)) {}

AxialExpr::AxialExpr(std::vector<AxialTerm> terms) {
    // Group by (atom, alpha2 parity), align each group on its minimal
    // (x0^2+r^2)-power, merge monomials, then strip all (x0^2+r^2) factors
    // from the numerator.
    struct Group {
        int dmin = 0;
        std::vector<AxialTerm> pending;
    };
    std::map<std::pair<Atom, int>, Group> groups;
    for (auto& t : terms) {
        if (t.c.is_zero()) continue;
        if (t.key.a < 0)
            throw std::invalid_argument("AxialExpr: negative power of x0");
        int sigma = ((t.key.alpha2 % 2) + 2) % 2;
        int d = (t.key.alpha2 - sigma) / 2;
        auto [it, inserted] = groups.try_emplace({t.key.atom, sigma});
        Group& g = it->second;
        if (inserted || d < g.dmin) g.dmin = d;
        g.pending.push_back(std::move(t));
    }

    for (auto& [gk, g] : groups) {
        const auto [atom, sigma] = gk;
        Numerator num;
        for (const auto& t : g.pending) {
            int d = (t.key.alpha2 - sigma) / 2;
            int extra = d - g.dmin;
            for (int i = 0; i <= extra; ++i) {
                Coefficient c = t.c * Rational(binomial(extra, i));
                num_add(num, t.key.a + 2 * i, t.key.b + 2 * (extra - i), c);
            }
        }
        int d = g.dmin;
        while (try_divide_s2(num)) ++d;
        for (const auto& [ab, c] : num) {
            TermKey key{atom, ab.first, ab.second, 2 * d + sigma};
            terms_.emplace(key, c);
        }
    }
}

AxialExpr AxialExpr::term(const Coefficient& c, int a, int b, int alpha2, Atom atom) {
    return AxialExpr({AxialTerm{c, TermKey{atom, a, b, alpha2}}});
}

AxialExpr AxialExpr::operator+(const AxialExpr& rhs) const {
    std::vector<AxialTerm> all;
    all.reserve(terms_.size() + rhs.terms_.size());
    for (const auto& [k, c] : terms_) all.push_back({c, k});
    for (const auto& [k, c] : rhs.terms_) all.push_back({c, k});
    return AxialExpr(std::move(all));
}

AxialExpr AxialExpr::operator-(const AxialExpr& rhs) const { return *this + (-rhs); }

AxialExpr AxialExpr::operator-() const {
    AxialExpr out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

AxialExpr& AxialExpr::operator+=(const AxialExpr& rhs) {
    *this = *this + rhs;
    return *this;
}

AxialExpr AxialExpr::scaled(const Coefficient& c) const {
    if (c.is_zero()) return {};
    AxialExpr out;
    for (const auto& [k, tc] : terms_) out.terms_.emplace(k, tc * c);
    return out;
}

AxialExpr AxialExpr::mul_monomial(const Coefficient& c, int da, int db,
                                  int dalpha2) const {
    std::vector<AxialTerm> all;
    all.reserve(terms_.size());
    for (const auto& [k, tc] : terms_)
        all.push_back({tc * c, TermKey{k.atom, k.a + da, k.b + db, k.alpha2 + dalpha2}});
    return AxialExpr(std::move(all));
}

AxialExpr diff_x0(const AxialExpr& e) {
    std::vector<AxialTerm> out;
    for (const auto& [k, c] : e.terms_) {
        if (k.a > 0)
            out.push_back({c * Rational(k.a), {k.atom, k.a - 1, k.b, k.alpha2}});
        if (k.alpha2 != 0)
            out.push_back({c * Rational(k.alpha2), {k.atom, k.a + 1, k.b, k.alpha2 - 2}});
        switch (k.atom) {
            case Atom::One:
                break;
            case Atom::Log:  // d/dx0 ln(x0+s) = s^-1
                out.push_back({c, {Atom::One, k.a, k.b, k.alpha2 - 1}});
                break;
            case Atom::Arctan:  // d/dx0 arctan(r/x0) = -r s^-2
                out.push_back({-c, {Atom::One, k.a, k.b + 1, k.alpha2 - 2}});
                break;
            case Atom::LnSqrt:  // d/dx0 ln(s) = x0 s^-2
                out.push_back({c, {Atom::One, k.a + 1, k.b, k.alpha2 - 2}});
                break;
        }
    }
    return AxialExpr(std::move(out));
}

AxialExpr diff_r(const AxialExpr& e) {
    std::vector<AxialTerm> out;
    for (const auto& [k, c] : e.terms_) {
        if (k.b != 0)
            out.push_back({c * Rational(k.b), {k.atom, k.a, k.b - 1, k.alpha2}});
        if (k.alpha2 != 0)
            out.push_back({c * Rational(k.alpha2), {k.atom, k.a, k.b + 1, k.alpha2 - 2}});
        switch (k.atom) {
            case Atom::One:
                break;
            case Atom::Log:  // d/dr ln(x0+s) = r^-1 (1 - x0 s^-1)
                out.push_back({c, {Atom::One, k.a, k.b - 1, k.alpha2}});
                out.push_back({-c, {Atom::One, k.a + 1, k.b - 1, k.alpha2 - 1}});
                break;
            case Atom::Arctan:  // d/dr arctan(r/x0) = x0 s^-2
                out.push_back({c, {Atom::One, k.a + 1, k.b, k.alpha2 - 2}});
                break;
            case Atom::LnSqrt:  // d/dr ln(s) = r s^-2
                out.push_back({c, {Atom::One, k.a, k.b + 1, k.alpha2 - 2}});
                break;
        }
    }
    return AxialExpr(std::move(out));
}

}  // namespace halfpot
