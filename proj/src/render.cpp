#include "render.hpp"

#include "gegenbauer.hpp"

#include <json.hpp>

#include <sstream>

namespace halfpot {

namespace {

using nlohmann::json;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr int kSchemaVersion = 1;

std::string radial_symbol(int m) { return m == 2 ? "r" : "\\rho"; }

std::string pow_latex(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    std::ostringstream os;
    os << base << "^" << (e < 0 || e > 9 ? "{" + std::to_string(e) + "}"
                                         : std::to_string(e));
    return os.str();
}

// |q| * pi^n as LaTeX; the caller places the sign.
std::string latex_pi_monomial(Rational q, int n) {
    if (q < 0) q = -q;
    BigInt num = numerator(q), den = denominator(q);
    std::ostringstream nu, de;
    if (n >= 0) {
        nu << num;
        if (n == 1) nu << "\\pi";
        if (n > 1) nu << "\\pi^" << n;
        if (den != 1) de << den;
    } else {
        nu << num;
        if (den != 1) de << den;
        if (n == -1) de << "\\pi";
        if (n < -1) de << "\\pi^" << -n;
    }
    if (de.str().empty()) return nu.str();
    return "\\frac{" + nu.str() + "}{" + de.str() + "}";
}

}  // namespace

std::string latex_coefficient(const Coefficient& c) {
    if (c.is_zero()) return "0";
    if (c.terms().size() == 1) {
        const auto& [n, q] = *c.terms().begin();
        return std::string(q < 0 ? "-" : "") + latex_pi_monomial(q, n);
    }
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        if (!first) os << (it->second < 0 ? " - " : " + ");
        else if (it->second < 0) os << "-";
        first = false;
        os << latex_pi_monomial(it->second, it->first);
    }
    os << ")";
    return os.str();
}

namespace {

// ---- downstream rows ------------------------------------------------------

// A monomial of the displayed numerator polynomial: coeff * x0^a * r^i.
struct Mono {
    int a;
    int i;
    BigInt coeff;
};

// x0-part first, as the downstream rows print them.
std::string mono_body_x0_first(const Mono& mo, const std::string& rsym) {
    std::string x = pow_latex("x_0", mo.a);
    std::string r = pow_latex(rsym, mo.i);
    if (x.empty() && r.empty()) return "";
    if (x.empty()) return r;
    if (r.empty()) return x;
    return x + " " + r;
}

std::string join_monomials(const std::vector<Mono>& monos, const std::string& rsym) {
    std::ostringstream os;
    bool first = true;
    for (const Mono& mo : monos) {
        BigInt c = mo.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string body = mono_body_x0_first(mo, rsym);
        if (c != 1 || body.empty()) os << c << (body.empty() ? "" : " ");
        os << body;
    }
    return os.str();
}

}  // namespace

std::string latex_downstream_row(int depth, int m, bool vector_part) {
    AxialExpr e = vector_part ? downstream_B(depth, m) : downstream_A(depth, m);
    const Coefficient unit = (m == 2) ? Coefficient::pi_power(1, 2, -1)
                                      : Coefficient::pi_power(1, 1, -2);
    std::vector<Mono> monos;  // built descending in the x0 power
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const TermKey& k = it->first;
        if (k.atom != Atom::One)
            throw std::logic_error("downstream row: unexpected atom");
        Coefficient ratio = it->second * (m == 2 ? Coefficient::pi_power(2, 1, 1)
                                                 : Coefficient::pi_power(1, 1, 2));
        if (ratio.terms().size() != 1 || ratio.terms().begin()->first != 0 ||
            denominator(ratio.terms().begin()->second) != 1)
            throw std::logic_error("downstream row: non-integer numerator");
        // the stored omega-density carries an extra factor r relative to the
        // printed x-underline form
        monos.push_back({k.a, k.b - (vector_part ? 1 : 0),
                         numerator(ratio.terms().begin()->second)});
    }

    const std::string rsym = radial_symbol(m);
    std::string sign_prefix;
    BigInt content = 1;
    if (vector_part) {
        if (m == 2) {
            if (!monos.empty() && monos.front().coeff < 0) {
                sign_prefix = "- ";
                for (auto& mo : monos) mo.coeff = -mo.coeff;
            }
        } else {
            content = 0;
            for (const auto& mo : monos)
                content = boost::multiprecision::gcd(content, mo.coeff);
            if (content == 0) content = 1;
            for (auto& mo : monos) mo.coeff /= content;
            if (monos.size() == 1 && monos.front().coeff < 0) {
                sign_prefix = "- ";
                monos.front().coeff = -monos.front().coeff;
            }
        }
    }

    std::string numer = join_monomials(monos, rsym);
    if (vector_part) {
        if (monos.size() > 1) numer = "(" + numer + ")";
        if (numer == "1") numer.clear();
        numer += (numer.empty() ? "" : " ");
        numer += "\\underline{x}";
    }

    std::ostringstream pre;
    pre << sign_prefix << "\\frac{" << content << "}{";
    if (m == 2)
        pre << "2\\pi";
    else
        pre << "\\pi^2";
    pre << "}";

    std::ostringstream denom;
    denom << "(x_0^2 + " << rsym << "^2)^{";
    if (m == 2)
        denom << 2 * depth + 1 << "/2";
    else
        denom << depth + 1;
    denom << "}";

    std::ostringstream os;
    os << (vector_part ? "B_{" : "A_{") << -depth << "} = " << pre.str()
       << " \\frac{" << numer << "}{" << denom.str() << "}";
    return os.str();
}

namespace {

// ---- upstream rows --------------------------------------------------------

// r-part first, as the 2pi A_j lines print them.
std::string upstream_monomial(const Coefficient& c, int a, int b,
                              const std::string& rsym, bool leading) {
    Coefficient cc = c;
    std::ostringstream os;
    bool negative = !cc.terms().empty() && cc.terms().begin()->second < 0 &&
                    cc.terms().size() == 1;
    if (leading) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    if (negative) cc = -cc;
    std::string body;
    std::string r = pow_latex(rsym, b);
    std::string x = pow_latex("x_0", a);
    if (!r.empty()) body = r;
    if (!x.empty()) body += (body.empty() ? "" : " ") + x;
    std::string coef = latex_coefficient(cc);
    if (coef == "1") coef.clear();  // the group shorthand supplies the content
    os << coef << (coef.empty() || body.empty() ? "" : " ") << body;
    return os.str();
}

std::string upstream_group(const upstream::Poly& p, const std::string& rsym,
                           bool leading_group) {
    std::ostringstream os;
    bool first = true;
    // descending x0 power
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        os << upstream_monomial(it->second, it->first.first, it->first.second, rsym,
                                first && leading_group);
        first = false;
    }
    return os.str();
}

void poly_accumulate(upstream::Poly& p, int a, int b, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// Expand the (atom) terms of a canonical expression back into a bivariate
// polynomial, multiplying out any nonnegative (x0^2+r^2) powers the
// normalization may have collected.  sigma is the residual s power the group
// is displayed with (1 for the SQRT group, else 0).
upstream::Poly poly_of_atom(const AxialExpr& e, Atom atom, int sigma, int rshift,
                            const Coefficient& scale) {
    upstream::Poly out;
    for (const auto& [k, c] : e.terms()) {
        if (k.atom != atom) continue;
        if (atom == Atom::One && (((k.alpha2 % 2) + 2) % 2) != sigma) continue;
        int n = k.alpha2 - sigma;
        if (n % 2 != 0 || n < 0)
            throw std::logic_error("upstream row: unexpected s power");
        int d = n / 2;
        for (int i = 0; i <= d; ++i) {
            BigInt binom = 1;
            for (int t = 0; t < i; ++t) binom = binom * (d - t) / (t + 1);
            poly_accumulate(out, k.a + 2 * i, k.b + rshift + 2 * (d - i),
                            c * scale * Rational(binom));
        }
    }
    return out;
}

}  // namespace

std::string latex_upstream_row(const AxialExpr& a_j, int j, int m) {
    const Coefficient two_pi = Coefficient::pi_power(2, 1, 1);
    const std::string rsym = "r";  // both Propositions state the 2pi A_j lines in r
    upstream::Poly loggroup, sgroup, plain;
    if (m == 2) {
        loggroup = poly_of_atom(a_j, Atom::Log, 0, 0, two_pi);
        sgroup = poly_of_atom(a_j, Atom::One, 1, 0, two_pi);
        plain = poly_of_atom(a_j, Atom::One, 0, 0, two_pi);
    } else {
        loggroup = poly_of_atom(a_j, Atom::Arctan, 0, 1, two_pi);  // the U group
        sgroup = poly_of_atom(a_j, Atom::LnSqrt, 0, 0, two_pi);    // the V group
        plain = poly_of_atom(a_j, Atom::One, 0, 0, two_pi);        // the W group
    }

    const char* name1 = (m == 2) ? " LOG" : " QUAT";
    const char* name2 = (m == 2) ? " SQRT" : " LNSQ";
    std::ostringstream os;
    os << "2\\pi A_" << j << "(x_0,\\underline{x}) = ";
    bool leading = true;
    auto emit_group = [&](const upstream::Poly& p, const char* name) {
        if (p.empty()) return;
        std::string g = upstream_group(p, rsym, true);
        if (p.size() > 1) g = "(" + g + ")";
        if (!leading) {
            if (g.starts_with("-"))
                g = " - " + g.substr(1);
            else
                g = " + " + g;
        }
        os << g << name;
        leading = false;
    };
    emit_group(loggroup, name1);
    emit_group(sgroup, name2);
    if (!plain.empty()) os << upstream_group(plain, rsym, leading);
    return os.str();
}

std::string latex_axial(const AxialExpr& e, int m) {
    if (e.is_zero()) return "0";
    const std::string rsym = radial_symbol(m);
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        std::string coef = latex_coefficient(c);
        bool neg = coef.size() && coef[0] == '-';
        if (neg) coef = coef.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string body;
        auto append = [&](const std::string& s) {
            if (s.empty()) return;
            body += (body.empty() ? "" : " \\, ") + s;
        };
        append(pow_latex("x_0", k.a));
        append(pow_latex(rsym, k.b));
        if (k.alpha2 != 0) {
            std::ostringstream sp;
            sp << "(x_0^2 + " << rsym << "^2)^{";
            if (k.alpha2 % 2 == 0)
                sp << k.alpha2 / 2;
            else
                sp << k.alpha2 << "/2";
            sp << "}";
            append(sp.str());
        }
        switch (k.atom) {
            case Atom::One: break;
            case Atom::Log: append("LOG"); break;
            case Atom::Arctan: append(m == 2 ? "ARCTAN" : "\\rho \\, QUAT"); break;
            case Atom::LnSqrt: append("LNSQ"); break;
        }
        if (coef == "1" && !body.empty()) coef.clear();
        os << coef << (coef.empty() || body.empty() ? "" : " \\, ") << body;
    }
    return os.str();
}

std::string text_axial(const AxialExpr& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.a != 0) os << "*x0^" << k.a;
        if (k.b != 0) os << "*r^" << k.b;
        if (k.alpha2 != 0) os << "*s^" << k.alpha2;
        if (k.atom != Atom::One) os << "*" << atom_name(k.atom);
    }
    return os.str();
}

namespace {

json axial_to_json(const AxialExpr& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms()) {
        terms.push_back({{"c", c.to_string()},
                         {"a", k.a},
                         {"b", k.b},
                         {"alpha2", k.alpha2},
                         {"atom", atom_name(k.atom)}});
    }
    return terms;
}

json radial_to_json(const RadialDensity& d) {
    json terms = json::array();
    for (const auto& [k, c] : d.terms())
        terms.push_back({{"c", c.to_string()}, {"b", k.b}, {"log", k.log}});
    return terms;
}

json boundary_to_json(const BoundaryDensity& d, const std::string& label) {
    json singular = json::array();
    for (const auto& [k, c] : d.singular)
        singular.push_back({{"k", k}, {"c", c.to_string()}});
    return {{"scalar", radial_to_json(d.scalar)},
            {"vector", radial_to_json(d.vector)},
            {"singular", singular},
            {"label", label}};
}

std::string singular_text(const std::map<int, Coefficient>& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k == 0)
            os << "*delta";
        else
            os << "*(-dirac)^" << k << " delta";
    }
    return os.str();
}

std::string boundary_entry_text(const BoundaryDensity& d, bool vector_side) {
    std::ostringstream os;
    const RadialDensity& reg = vector_side ? d.vector : d.scalar;
    bool have = false;
    if (!reg.is_zero()) {
        os << reg.to_string();
        if (vector_side) os << " (omega)";
        have = true;
    }
    if (!d.singular.empty()) {
        if (have) os << " + ";
        os << singular_text(d.singular);
        have = true;
    }
    if (!have) os << "0";
    return os.str();
}

json chain_to_json_obj(const Chain& chain) {
    json levels = json::array();
    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        levels.push_back(
            {{"level", level},
             {"A", axial_to_json(rec.pair.A)},
             {"B", axial_to_json(rec.pair.B)},
             {"boundary",
              {{"a", boundary_to_json(rec.a, boundary_label_a(level))},
               {"b", boundary_to_json(rec.b, boundary_label_b(level))}}}});
    }
    return {{"schema_version", kSchemaVersion},
            {"ambient_dimension", chain.m() + 1},
            {"m", chain.m()},
            {"from", chain.lo()},
            {"to", chain.hi()},
            {"levels", levels}};
}

}  // namespace

std::string chain_json(const Chain& chain) {
    return chain_to_json_obj(chain).dump(2) + "\n";
}

std::string chain_text(const Chain& chain) {
    std::ostringstream os;
    os << "# potential chain, R^" << chain.m() + 1 << "_+ (m = " << chain.m()
       << "), levels " << chain.lo() << ".." << chain.hi() << "\n";
    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        os << "\nlevel " << level << ":\n";
        os << "  A = " << text_axial(rec.pair.A) << "\n";
        os << "  B = omega * [ " << text_axial(rec.pair.B) << " ]\n";
        os << "  a = " << boundary_entry_text(rec.a, false) << "   ["
           << boundary_label_a(level) << "]\n";
        os << "  b = " << boundary_entry_text(rec.b, true) << "   ["
           << boundary_label_b(level) << "]\n";
    }
    return os.str();
}

std::string formulas_latex(const Chain& chain) {
    const int m = chain.m();
    std::ostringstream os;
    for (int level = std::min(-1, chain.hi()); level >= chain.lo(); --level) {
        os << "\\[ " << latex_downstream_row(-level, m, false) << " \\]\n";
        os << "\\[ " << latex_downstream_row(-level, m, true) << " \\]\n";
    }
    if (chain.has(0)) {
        const ChainRecord& rec = chain.at(0);
        os << "\\[ A_0 = " << latex_axial(rec.pair.A, m) << " \\]\n";
        os << "\\[ B_0 = \\underline{\\omega} \\, ( " << latex_axial(rec.pair.B, m)
           << " ) \\]\n";
    }
    for (int level = std::max(1, chain.lo()); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        os << "\\[ " << latex_upstream_row(rec.pair.A, level, m) << " \\]\n";
        os << "\\[ B_" << level << " = \\underline{\\omega} \\, ( "
           << latex_axial(rec.pair.B, m) << " ) \\]\n";
    }
    return os.str();
}

std::string formulas_text(const Chain& chain) {
    std::ostringstream os;
    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        os << "A[" << level << "] = " << text_axial(rec.pair.A) << "\n";
        os << "B[" << level << "] = omega * [ " << text_axial(rec.pair.B) << " ]\n";
    }
    return os.str();
}

std::string formulas_json(const Chain& chain) {
    json levels = json::array();
    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        levels.push_back({{"level", level},
                          {"A", axial_to_json(rec.pair.A)},
                          {"B", axial_to_json(rec.pair.B)}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"ambient_dimension", chain.m() + 1},
                {"m", chain.m()},
                {"levels", levels}}
               .dump(2) +
           "\n";
}

std::string chain_latex(const Chain& chain) {
    std::ostringstream os;
    os << "\\documentclass{article}\n\\usepackage{amsmath}\n"
       << "\\begin{document}\n"
       << "\\section*{Harmonic and monogenic potentials in $\\mathbb{R}^"
       << chain.m() + 1 << "_+$}\n"
       << "With $s = \\sqrt{x_0^2 + " << radial_symbol(chain.m())
       << "^2}$, $LOG = \\ln(x_0+s)$, $SQRT = s$, $QUAT = \\frac{1}{"
       << radial_symbol(chain.m()) << "}\\arctan\\frac{" << radial_symbol(chain.m())
       << "}{x_0}$, $LNSQ = \\ln s$:\n\n"
       << formulas_latex(chain) << "\\end{document}\n";
    return os.str();
}

std::string boundary_json(const Chain& chain) {
    json levels = json::array();
    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        levels.push_back({{"level", level},
                          {"a", boundary_to_json(rec.a, boundary_label_a(level))},
                          {"b", boundary_to_json(rec.b, boundary_label_b(level))}});
    }
    json notes = {
        {"hilbert", "H[a_k] = b_k and H[b_k] = a_k for every level (catalogued, "
                    "not computed)"},
        {"convolution",
         "a_{-j} * a_{-k} = a_{-j-k+1}, a_{-j} * b_{-k} = b_{-j} * a_{-k} = "
         "b_{-j-k+1}, b_{-j} * b_{-k} = a_{-j-k+1} (catalogued, not computed)"}};
    return json{{"schema_version", kSchemaVersion},
                {"ambient_dimension", chain.m() + 1},
                {"m", chain.m()},
                {"from", chain.lo()},
                {"to", chain.hi()},
                {"levels", levels},
                {"notes", notes}}
               .dump(2) +
           "\n";
}

std::string boundary_text(const Chain& chain) {
    std::ostringstream os;
    os << "# boundary value catalogue, R^" << chain.m() << " (levels " << chain.lo()
       << ".." << chain.hi() << ")\n";
    os << "# E_k = fundamental solution of dirac^k, F_k = fundamental solution "
          "of the Hilbert-Dirac operator ^kH\n";
    for (int level = chain.lo(); level <= chain.hi(); ++level) {
        const ChainRecord& rec = chain.at(level);
        os << "a_{" << level << "} = " << boundary_entry_text(rec.a, false) << "   ["
           << boundary_label_a(level) << "]\n";
        os << "b_{" << level << "} = " << boundary_entry_text(rec.b, true) << "   ["
           << boundary_label_b(level) << "]\n";
    }
    os << "# Hilbert pairing: H[a_k] = b_k, H[b_k] = a_k (catalogued, not "
          "computed)\n";
    os << "# convolution semigroup: a_{-j} * a_{-k} = a_{-j-k+1}, a_{-j} * b_{-k} "
          "= b_{-j} * a_{-k} = b_{-j-k+1}, b_{-j} * b_{-k} = a_{-j-k+1} "
          "(catalogued, not computed)\n";
    return os.str();
}

std::string report_json(const VerifyReport& symbolic,
                        const std::vector<ResidualReport>& numeric) {
    json items = json::array();
    for (const auto& it : symbolic.items) {
        json j = {{"kind", "symbolic"},
                  {"identity", it.identity},
                  {"level", it.level},
                  {"pass", it.pass}};
        if (!it.detail.empty()) j["detail"] = it.detail;
        items.push_back(j);
    }
    bool numeric_pass = true;
    for (const auto& it : numeric) {
        numeric_pass = numeric_pass && it.pass;
        items.push_back({{"kind", "numeric"},
                         {"identity", it.identity},
                         {"level", it.level},
                         {"h", it.h},
                         {"max_rel_residual", it.max_rel_residual},
                         {"tolerance", it.tolerance},
                         {"pass", it.pass}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"m", symbolic.m},
                {"all_pass", symbolic.all_pass() && numeric_pass},
                {"items", items}}
               .dump(2) +
           "\n";
}

}  // namespace halfpot
