#include "chain.hpp"

#include "gegenbauer.hpp"

#include <sstream>

namespace halfpot {

namespace {

void require_dim(int m) {
    if (m != 2 && m != 3) throw std::invalid_argument("dimension m must be 2 or 3");
}

Coefficient closed_alpha(int k, int m) {
    // m=2: (-1)^{k+1} / (2^{2k+1} pi^{k+2} k!),  m=3: (-1)^{k+1} / (2^{2k+2} pi^{k+3} k!)
    int extra = (m == 2) ? 1 : 2;
    Rational q = Rational(1) / (pow2(2 * k + extra) *
                                factorial(k));
    if (k % 2 == 0) q = -q;
    return Coefficient(q, -(k + extra + 1));
}

Coefficient closed_beta(int k, int m) {
    // m=2: (-1)^k H_k / (2^{2k+1} pi^{k+2} k!),  m=3: (-1)^k (H_{2k+1}-1) / (2^{2k+2} pi^{k+3} k!)
    int extra = (m == 2) ? 1 : 2;
    Rational h = (m == 2) ? harmonic_number(k) : harmonic_number(2 * k + 1) - 1;
    Rational q = h / Rational(pow2(2 * k + extra) *
                              factorial(k));
    if (k % 2 != 0) q = -q;
    return Coefficient(q, -(k + extra + 1));
}

}  // namespace

AlphaBeta alpha_beta(int k, int m) {
    require_dim(m);
    if (k < 0) throw std::invalid_argument("alpha_beta: k must be >= 0");
    Coefficient alpha = (m == 2) ? Coefficient::pi_power(-1, 2, -2)
                                 : Coefficient::pi_power(-1, 4, -3);
    Coefficient beta;  // 0
    const Coefficient inv2pi = Coefficient::pi_power(-1, 2, -1);
    for (int i = 0; i < k; ++i) {
        // index 2i -> 2i+2
        Rational step(1, 2 * i + 2);
        Rational mix = (m == 2) ? Rational(1, i + 1)
                                : Rational(4 * i + 5, (2 * i + 2) * (2 * i + 3));
        Coefficient next_alpha = inv2pi * step * alpha;
        Coefficient next_beta = inv2pi * step * (beta - alpha * mix);
        alpha = next_alpha;
        beta = next_beta;
    }
    if (alpha != closed_alpha(k, m) || beta != closed_beta(k, m)) {
        std::ostringstream os;
        os << "alpha/beta recursion disagrees with closed form at k=" << k
           << ", m=" << m;
        throw ConsistencyError(os.str());
    }
    return AlphaBeta{k, m, alpha, beta};
}

RadialDensity upstream_boundary(int j, int m) {
    require_dim(m);
    if (j < 1) throw std::invalid_argument("upstream_boundary: j must be >= 1");
    if (m == 2) {
        if (j % 2 == 0) {
            int k = j / 2;
            Rational q = Rational(1) / (double_factorial(2 * k - 1) *
                                        double_factorial(2 * k - 1) * 2);
            if (k % 2 == 0) q = -q;
            return RadialDensity::term(Coefficient(q, -1), 2 * k - 1);
        }
        int k = (j - 1) / 2;
        AlphaBeta ab = alpha_beta(k, 2);
        Coefficient f = Coefficient(Rational(1, factorial(k)), k + 1);
        return RadialDensity::term(ab.alpha * f, 2 * k, true) +
               RadialDensity::term(ab.beta * f, 2 * k, false);
    }
    if (j % 2 == 1) {
        int k = (j - 1) / 2;
        Rational q = Rational(1) / (pow2(k + 2) *
                                    factorial(k) * double_factorial(2 * k - 1));
        if (k % 2 != 0) q = -q;
        return RadialDensity::term(Coefficient(q, -1), 2 * k - 1);
    }
    int k = j / 2;
    AlphaBeta ab = alpha_beta(k - 1, 3);
    Coefficient f = Coefficient(Rational(-pow2(k), double_factorial(2 * k - 1)), k);
    return RadialDensity::term(ab.alpha * f, 2 * k - 2, true) +
           RadialDensity::term(ab.beta * f, 2 * k - 2, false);
}

BoundaryDensity boundary_a(int level, int m) {
    require_dim(m);
    BoundaryDensity d;
    d.m = m;
    if (level >= 1) {
        d.scalar = upstream_boundary(level, m);
    } else if (level == 0) {
        d.scalar = (m == 2)
                       ? RadialDensity::term(Coefficient::pi_power(-1, 2, -1), -1)
                       : RadialDensity::term(Coefficient::pi_power(-1, 2, -2), -2);
    } else if (level == -1) {
        d.singular[0] = Coefficient::integer(1);  // delta
    } else if (level % 2 == 0) {
        // a_{-2l} = (-1)^{l-1} Fp closed form
        int l = -level / 2;
        if (m == 2) {
            Rational q = Rational(double_factorial(2 * l - 1) *
                                  double_factorial(2 * l - 1)) / 2;
            if (l % 2 == 0) q = -q;
            d.scalar = RadialDensity::term(Coefficient(q, -1), -(2 * l + 1));
        } else {
            Rational q = Rational(pow2(l - 1) *
                                  double_factorial(2 * l - 1) * factorial(l));
            if (l % 2 == 0) q = -q;
            d.scalar = RadialDensity::term(Coefficient(q, -2), -(2 * l + 2));
        }
    } else {
        // a_{-2l-1} = dirac^{2l} delta = (-dirac)^{2l} delta
        int l = (-level - 1) / 2;
        d.singular[2 * l] = Coefficient::integer(1);
    }
    return d;
}

BoundaryDensity boundary_b(int level, int m) {
    require_dim(m);
    BoundaryDensity d;
    d.m = m;
    if (level >= 0) {
        // b_j = -dirac a_{j+1} on the regular parts
        d.vector = -diff_r(upstream_boundary(level + 1, m));
    } else if (level % 2 == 0) {
        // b_{-2l} = (-dirac)^{2l-1} delta
        int l = -level / 2;
        d.singular[2 * l - 1] = Coefficient::integer(1);
    } else {
        // b_{-2l-1}, regular Fp closed form (l = 0 gives the Hilbert kernel H)
        int l = (-level - 1) / 2;
        if (m == 2) {
            Rational q = Rational(double_factorial(2 * l - 1) *
                                  double_factorial(2 * l + 1)) / 2;
            if (l % 2 == 0) q = -q;
            d.vector = RadialDensity::term(Coefficient(q, -1), -(2 * l + 2));
        } else {
            Rational q = Rational(pow2(l) *
                                  double_factorial(2 * l - 1) * factorial(l + 1));
            if (l % 2 == 0) q = -q;
            d.vector = RadialDensity::term(Coefficient(q, -2), -(2 * l + 3));
        }
    }
    return d;
}

std::string boundary_label_a(int level) {
    std::ostringstream os;
    bool odd = ((level % 2) + 2) % 2 == 1;
    os << (odd ? "E_{" : "-F_{") << level + 1 << "}";
    return os.str();
}

std::string boundary_label_b(int level) {
    std::ostringstream os;
    bool odd = ((level % 2) + 2) % 2 == 1;
    os << (odd ? "F_{" : "-E_{") << level + 1 << "}";
    return os.str();
}

namespace upstream {

namespace {

Poly& poly_add(Poly& p, std::pair<int, int> key, const Coefficient& c) {
    if (c.is_zero()) return p;
    auto [it, inserted] = p.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
    return p;
}

Poly poly_sum(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [k, c] : b) poly_add(out, k, c);
    return out;
}

Poly poly_neg(const Poly& a) {
    Poly out;
    for (const auto& [k, c] : a) out[k] = -c;
    return out;
}

Poly poly_diff_x0(const Poly& a) {
    Poly out;
    for (const auto& [k, c] : a)
        if (k.first > 0) poly_add(out, {k.first - 1, k.second}, c * Rational(k.first));
    return out;
}

Poly poly_integrate_x0(const Poly& a) {
    Poly out;
    for (const auto& [k, c] : a)
        poly_add(out, {k.first + 1, k.second}, c / Rational(k.first + 1));
    return out;
}

Poly poly_mul_x0(const Poly& a) {
    Poly out;
    for (const auto& [k, c] : a) out[{k.first + 1, k.second}] = c;
    return out;
}

Poly poly_mul_s2(const Poly& a) {
    Poly out;
    for (const auto& [k, c] : a) {
        poly_add(out, {k.first + 2, k.second}, c);
        poly_add(out, {k.first, k.second + 2}, c);
    }
    return out;
}

Coefficient poly_at(const Poly& a, int x0_pow, int r_pow) {
    auto it = a.find({x0_pow, r_pow});
    return it == a.end() ? Coefficient() : it->second;
}

// Log-part and constant-part coefficients of the catalogued a_j at r^b.
std::pair<Coefficient, Coefficient> boundary_parts(int j, int m, int b) {
    RadialDensity a = upstream_boundary(j, m);
    Coefficient logc, constc;
    for (const auto& [k, c] : a.terms()) {
        if (k.b != b)
            throw ConsistencyError("upstream boundary value has unexpected r power");
        (k.log ? logc : constc) += c;
    }
    return {logc, constc};
}

}  // namespace

Form seed(int j, int m) {
    require_dim(m);
    Form f;
    if (m == 2) {
        // 2pi A_1 = -LOG,  2pi A_2 = -x0 LOG + SQRT
        if (j == 1) {
            f.P[{0, 0}] = Coefficient::integer(-1);
        } else if (j == 2) {
            f.P[{1, 0}] = Coefficient::integer(-1);
            f.Q[{0, 0}] = Coefficient::integer(1);
        } else {
            throw std::invalid_argument("seed: only levels 1 and 2 are seeded");
        }
        return f;
    }
    // 2pi A_1 = (1/pi) QUAT,  2pi A_2 = (1/pi) x0 QUAT + (1/pi) LNSQ
    const Coefficient invpi = Coefficient::pi_power(1, 1, -1);
    if (j == 1) {
        f.P[{0, 0}] = invpi;
    } else if (j == 2) {
        f.P[{1, 0}] = invpi;
        f.Q[{0, 0}] = invpi;
    } else {
        throw std::invalid_argument("seed: only levels 1 and 2 are seeded");
    }
    return f;
}

Form solve(const Form& prev, int j, int m) {
    require_dim(m);
    if (j < 2) throw std::invalid_argument("solve: j must be >= 2");
    const Coefficient two_pi = Coefficient::pi_power(2, 1, 1);
    Form f;
    f.P = poly_integrate_x0(prev.P);
    if (m == 2) {
        f.S = poly_integrate_x0(prev.S);
        if (j % 2 == 1) {
            // p^0 and s^0 come from the limit condition against a_j
            auto [logc, constc] = boundary_parts(j, m, j - 1);
            poly_add(f.P, {0, j - 1}, two_pi * logc);
            poly_add(f.S, {0, j - 1}, two_pi * constc);
        }
    } else {
        f.Q = poly_integrate_x0(prev.Q);
        if (j % 2 == 0) {
            // v^0 and w^0 come from the limit condition against a_j
            auto [logc, constc] = boundary_parts(j, m, j - 2);
            poly_add(f.Q, {0, j - 2}, two_pi * logc);
            poly_add(f.S, {0, j - 2}, two_pi * constc);
        } else {
            // (pi/2) u^0 r^{j-2} = 2pi a_j
            auto [logc, constc] = boundary_parts(j, m, j - 2);
            if (!logc.is_zero())
                throw ConsistencyError("odd-level boundary value has a log part");
            poly_add(f.P, {0, j - 1}, constc * Rational(4));
        }
    }

    // Remaining family by matching monomial coefficients, descending x0 power:
    //   m=2:  P_j + x0 Q_j + s^2 d_x0 Q_j = s^2 Q_{j-1}      (unknown Q_j)
    //   m=3: -U_j + x0 V_j + s^2 d_x0 W_j = s^2 W_{j-1}      (unknown W_j)
    Poly base = (m == 2) ? f.P : poly_sum(poly_neg(f.P), poly_mul_x0(f.Q));
    Poly rhs = poly_mul_s2((m == 2) ? prev.Q : prev.S);
    Poly& unknown = (m == 2) ? f.Q : f.S;
    auto residual = [&](const Poly& t) {
        Poly r = base;
        if (m == 2) r = poly_sum(r, poly_mul_x0(t));
        r = poly_sum(r, poly_mul_s2(poly_diff_x0(t)));
        return poly_sum(r, poly_neg(rhs));
    };

    int a_low = (m == 2) ? (j % 2 == 0 ? 0 : 1) : (j % 2 == 0 ? 2 : 1);
    for (int a = j - 2; a >= a_low; a -= 2) {
        int b = j - 2 - a;
        Coefficient cur = poly_at(residual(unknown), a + 1, b);
        long weight = (m == 2) ? a + 1 : a;
        poly_add(unknown, {a, b}, -(cur / Rational(weight)));
    }
    if (!residual(unknown).empty()) {
        std::ostringstream os;
        os << "upstream solver: redundant equation violated at level " << j
           << " (m=" << m << ")";
        throw ConsistencyError(os.str());
    }
    return f;
}

AxialExpr assemble(const Form& f, int m) {
    require_dim(m);
    const Coefficient inv2pi = Coefficient::pi_power(1, 2, -1);
    std::vector<AxialTerm> terms;
    if (m == 2) {
        for (const auto& [k, c] : f.P)
            terms.push_back({c * inv2pi, {Atom::Log, k.first, k.second, 0}});
        for (const auto& [k, c] : f.Q)
            terms.push_back({c * inv2pi, {Atom::One, k.first, k.second, 1}});
        for (const auto& [k, c] : f.S)
            terms.push_back({c * inv2pi, {Atom::One, k.first, k.second, 0}});
    } else {
        for (const auto& [k, c] : f.P)
            terms.push_back({c * inv2pi, {Atom::Arctan, k.first, k.second - 1, 0}});
        for (const auto& [k, c] : f.Q)
            terms.push_back({c * inv2pi, {Atom::LnSqrt, k.first, k.second, 0}});
        for (const auto& [k, c] : f.S)
            terms.push_back({c * inv2pi, {Atom::One, k.first, k.second, 0}});
    }
    return AxialExpr(std::move(terms));
}

}  // namespace upstream

namespace {

PotentialPair pivot_pair(int m) {
    PotentialPair p;
    p.m = m;
    if (m == 2) {
        p.A = AxialExpr::term(Coefficient::pi_power(-1, 2, -1), 0, 0, -1);
        p.B = AxialExpr({{Coefficient::pi_power(1, 2, -1), {Atom::One, 0, -1, 0}},
                         {Coefficient::pi_power(-1, 2, -1), {Atom::One, 1, -1, -1}}});
    } else {
        p.A = AxialExpr::term(Coefficient::pi_power(-1, 2, -2), 0, 0, -2);
        p.B = AxialExpr({{Coefficient::pi_power(1, 2, -2), {Atom::Arctan, 0, -2, 0}},
                         {Coefficient::pi_power(-1, 2, -2), {Atom::One, 1, -1, -2}}});
    }
    return p;
}

PotentialPair downstream_pair(int depth, int m) {
    PotentialPair p;
    p.m = m;
    p.A = downstream_A(depth, m);
    p.B = downstream_B(depth, m);
    return p;
}

}  // namespace

Chain Chain::build(int m, int lo, int hi) {
    require_dim(m);
    if (lo > hi) throw std::invalid_argument("chain range: lo must be <= hi");
    Chain chain;
    chain.m_ = m;
    chain.lo_ = lo;
    chain.hi_ = hi;

    auto store = [&](int level, PotentialPair pair) {
        if (level < lo || level > hi) return;
        ChainRecord rec;
        rec.m = m;
        rec.level = level;
        rec.pair = std::move(pair);
        rec.a = boundary_a(level, m);
        rec.b = boundary_b(level, m);
        chain.records_.emplace(level, std::move(rec));
    };

    if (lo <= -1) {
        PotentialPair prev = downstream_pair(1, m);
        store(-1, prev);
        for (int level = -2; level >= lo; --level) {
            PotentialPair closed = downstream_pair(-level, m);
            PotentialPair via_dbar = apply_Dbar(prev);
            if (!(closed == via_dbar)) {
                std::ostringstream os;
                os << "downstream construction routes disagree at level " << level
                   << " (m=" << m << ")";
                throw ConsistencyError(os.str());
            }
            store(level, closed);
            prev = std::move(closed);
        }
    }
    if (lo <= 0 && hi >= 0) store(0, pivot_pair(m));
    if (hi >= 1) {
        std::map<int, upstream::Form> forms;
        forms.emplace(1, upstream::seed(1, m));
        forms.emplace(2, upstream::seed(2, m));
        for (int j = 3; j <= hi + 1; ++j)
            forms.emplace(j, upstream::solve(forms.at(j - 1), j, m));
        for (int j = std::max(1, lo); j <= hi; ++j) {
            PotentialPair p;
            p.m = m;
            p.A = upstream::assemble(forms.at(j), m);
            p.B = -diff_r(upstream::assemble(forms.at(j + 1), m));
            if (limit_x0_to_zero(p.A) != boundary_a(j, m).scalar) {
                std::ostringstream os;
                os << "upstream potential limit disagrees with the boundary catalogue "
                      "at level "
                   << j << " (m=" << m << ")";
                throw ConsistencyError(os.str());
            }
            store(j, std::move(p));
        }
    }
    return chain;
}

bool Chain::has(int level) const { return records_.contains(level); }

const ChainRecord& Chain::at(int level) const {
    auto it = records_.find(level);
    if (it == records_.end())
        throw std::out_of_range("chain level not built: " + std::to_string(level));
    return it->second;
}

Chain Chain::with_pair(int level, PotentialPair p) const {
    Chain out = *this;
    out.records_.at(level).pair = std::move(p);
    return out;
}

bool VerifyReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

VerifyReport verify_chain(const Chain& chain) {
    VerifyReport report;
    report.m = chain.m();
    auto add = [&](std::string identity, int level, bool pass, std::string detail = "") {
        report.items.push_back({std::move(identity), level, pass, std::move(detail)});
    };

    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        const int m = rec.m;

        add("D C_k = 0 (monogenicity)", level, apply_D(rec.pair).is_zero());
        add("laplacian A_k = 0", level, laplacian_scalar(rec.pair.A, m).is_zero());
        add("laplacian B_k = 0", level, laplacian_vector(rec.pair.B, m).is_zero());

        if (level <= -1) {
            bool ok = rec.pair.A == downstream_A(-level, m) &&
                      rec.pair.B == downstream_B(-level, m);
            add("stored level = Gegenbauer closed form", level, ok);
        }

        if (chain.has(level - 1)) {
            const ChainRecord& prev = chain.at(level - 1);
            add("d_x0 A_k = A_{k-1}", level, diff_x0(rec.pair.A) == prev.pair.A);
            add("d_x0 B_k = B_{k-1}", level, diff_x0(rec.pair.B) == prev.pair.B);
            add("-dirac A_k = B_{k-1}", level, -dirac_scalar(rec.pair.A) == prev.pair.B);
            add("-dirac B_k = A_{k-1}", level,
                -dirac_vector(rec.pair.B, m) == prev.pair.A);
            add("Dbar C_k = C_{k-1}", level, apply_Dbar(rec.pair) == prev.pair);
            add("-dirac a_k = b_{k-1} (regular parts)", level,
                radial_dirac_boundary(rec.a).vector == prev.b.vector);
            add("-dirac b_k = a_{k-1} (regular parts)", level,
                radial_dirac_boundary(rec.b).scalar == prev.a.scalar);
        }

        add("limit A_k = a_k (regular part)", level,
            limit_x0_to_zero(rec.pair.A) == rec.a.scalar);
        add("limit B_k = b_k (regular part)", level,
            limit_x0_to_zero(rec.pair.B) == rec.b.vector);
    }

    bool ab_ok = true;
    std::string ab_detail;
    try {
        for (int k = 0; k <= 20; ++k) alpha_beta(k, chain.m());
    } catch (const ConsistencyError& e) {
        ab_ok = false;
        ab_detail = e.what();
    }
    add("alpha/beta recursion = closed form, k <= 20", 0, ab_ok, ab_detail);

    return report;
}

}  // namespace halfpot
