#include "numeric.hpp"

#include <cmath>

namespace halfpot {

double eval(const AxialExpr& e, const SamplePoint& p) {
    if (!(p.x0 > 0.0) || !(p.r > 0.0))
        throw EvalError("eval: point must lie in the open quadrant x0 > 0, r > 0");
    // The canonical form is expanded, so at extreme aspect ratios its terms
    // can be many orders larger than their sum (x0^k (s - x0)-type
    // cancellations).  Accumulating in extended precision keeps the result
    // accurate enough for the finite-difference suite.
    const long double x0 = p.x0, r = p.r;
    const long double s = std::sqrt(x0 * x0 + r * r);
    long double v = 0.0L;
    for (const auto& [k, c] : e.terms()) {
        long double t = static_cast<long double>(c.to_double()) *
                        std::pow(x0, static_cast<long double>(k.a)) *
                        std::pow(r, static_cast<long double>(k.b)) *
                        std::pow(s, static_cast<long double>(k.alpha2));
        switch (k.atom) {
            case Atom::One: break;
            case Atom::Log: t *= std::log(x0 + s); break;
            case Atom::Arctan: t *= std::atan2(r, x0); break;
            case Atom::LnSqrt: t *= std::log(s); break;
        }
        v += t;
    }
    double out = static_cast<double>(v);
    if (!std::isfinite(out)) throw EvalError("eval: result is not finite");
    return out;
}

double eval(const RadialDensity& d, double r) {
    if (!(r > 0.0)) throw EvalError("eval: r must be > 0");
    double v = 0.0;
    for (const auto& [k, c] : d.terms()) {
        double t = c.to_double() * std::pow(r, k.b);
        if (k.log) t *= std::log(r);
        v += t;
    }
    if (!std::isfinite(v)) throw EvalError("eval: result is not finite");
    return v;
}

std::vector<SamplePoint> log_grid(double lo, double hi, int nx, int nr,
                                  double min_r) {
    std::vector<SamplePoint> pts;
    pts.reserve(static_cast<std::size_t>(nx) * nr);
    auto coord = [&](int i, int n) {
        return lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1));
    };
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nr; ++j) {
            SamplePoint p{coord(i, nx), coord(j, nr)};
            if (p.r >= min_r) pts.push_back(p);
        }
    return pts;
}

double fd1(const std::function<double(double)>& f, double x, double h) {
    return (f(x + 3 * h) - 9 * f(x + 2 * h) + 45 * f(x + h) - 45 * f(x - h) +
            9 * f(x - 2 * h) - f(x - 3 * h)) /
           (60 * h);
}

double fd1_order2(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

namespace {

struct PointResidual {
    double err = 0;
    double scale = 1;
    double rel() const { return err / scale; }
};

enum class Along { X0, R };

// Largest magnitude of e over the stencil abscissae.  The kernels oscillate
// and may vanish at the sample point itself, so the honest scale for a
// finite-difference residual is the size of the identity's terms over the
// footprint the stencil actually samples.
double stencil_max(const AxialExpr& e, const SamplePoint& p, Along axis, double h) {
    double worst = 0.0;
    for (int k = -3; k <= 3; ++k) {
        SamplePoint q = p;
        (axis == Along::X0 ? q.x0 : q.r) += k * h;
        worst = std::max(worst, std::abs(eval(e, q)));
    }
    return worst;
}

}  // namespace

std::vector<ResidualReport> numeric_identity_suite(
    const Chain& chain, int lo, int hi, const std::vector<SamplePoint>& points,
    double h, double tolerance) {
    std::vector<ResidualReport> reports;
    const int m = chain.m();
    lo = std::max(lo, chain.lo());
    hi = std::min(hi, chain.hi());

    auto run = [&](const std::string& identity, int level,
                   const std::function<PointResidual(const SamplePoint&)>& at) {
        double worst = 0.0;
        for (const SamplePoint& p : points) worst = std::max(worst, at(p).rel());
        reports.push_back({identity, level, h, worst, tolerance, worst <= tolerance});
    };

    for (int level = lo; level <= hi; ++level) {
        const ChainRecord& rec = chain.at(level);
        const AxialExpr& A = rec.pair.A;
        const AxialExpr& B = rec.pair.B;
        const AxialExpr Ax = diff_x0(A), Ar = diff_r(A);
        const AxialExpr Bx = diff_x0(B), Br = diff_r(B);

        auto along = [&](const AxialExpr& e, const SamplePoint& p, Along axis) {
            if (axis == Along::X0)
                return fd1([&](double x) { return eval(e, {x, p.r}); }, p.x0, h);
            return fd1([&](double r) { return eval(e, {p.x0, r}); }, p.r, h);
        };

        // FD of e along an axis against its exact symbolic derivative de;
        // the scale uses de over the stencil footprint.
        auto fd_vs = [&](const AxialExpr& e, const AxialExpr& de, Along axis,
                         const SamplePoint& p) {
            return std::make_pair(along(e, p, axis), stencil_max(de, p, axis, h));
        };

        if (chain.has(level - 1)) {
            const ChainRecord& prev = chain.at(level - 1);
            const AxialExpr Ap = prev.pair.A, Bp = prev.pair.B;

            run("d_x0 A_k = A_{k-1}", level, [&, Ap](const SamplePoint& p) {
                auto [lhs, mag] = fd_vs(A, Ap, Along::X0, p);
                return PointResidual{std::abs(lhs - eval(Ap, p)), 1 + mag};
            });
            run("d_x0 B_k = B_{k-1}", level, [&, Bp](const SamplePoint& p) {
                auto [lhs, mag] = fd_vs(B, Bp, Along::X0, p);
                return PointResidual{std::abs(lhs - eval(Bp, p)), 1 + mag};
            });
            run("-dirac A_k = B_{k-1}", level, [&, Bp](const SamplePoint& p) {
                auto [lhs, mag] = fd_vs(A, Bp, Along::R, p);
                return PointResidual{std::abs(-lhs - eval(Bp, p)), 1 + mag};
            });
            run("-dirac B_k = A_{k-1}", level, [&, Ap](const SamplePoint& p) {
                auto [t1, mag] = fd_vs(B, Br, Along::R, p);
                double t2 = (m - 1) * eval(B, p) / p.r;
                return PointResidual{std::abs(t1 + t2 - eval(Ap, p)),
                                     1 + mag + std::abs(t2)};
            });
        }

        run("D C_k = 0 (scalar part)", level, [&](const SamplePoint& p) {
            auto [t1, mag1] = fd_vs(A, Ax, Along::X0, p);
            auto [t2, mag2] = fd_vs(B, Br, Along::R, p);
            double t3 = (m - 1) * eval(B, p) / p.r;
            return PointResidual{std::abs(t1 - t2 - t3),
                                 1 + mag1 + mag2 + std::abs(t3)};
        });
        run("D C_k = 0 (vector part)", level, [&](const SamplePoint& p) {
            auto [t1, mag1] = fd_vs(B, Bx, Along::X0, p);
            auto [t2, mag2] = fd_vs(A, Ar, Along::R, p);
            return PointResidual{std::abs(t1 + t2), 1 + mag1 + mag2};
        });

        const AxialExpr Axx = diff_x0(Ax), Arr = diff_r(Ar);
        const AxialExpr Bxx = diff_x0(Bx), Brr = diff_r(Br);
        run("laplacian A_k = 0", level, [&, Ax, Ar, Axx, Arr](const SamplePoint& p) {
            auto [t1, mag1] = fd_vs(Ax, Axx, Along::X0, p);
            auto [t2, mag2] = fd_vs(Ar, Arr, Along::R, p);
            double t3 = (m - 1) * eval(Ar, p) / p.r;
            return PointResidual{std::abs(t1 + t2 + t3),
                                 1 + mag1 + mag2 + std::abs(t3)};
        });
        run("laplacian B_k = 0", level, [&, Bx, Br, Bxx, Brr](const SamplePoint& p) {
            auto [t1, mag1] = fd_vs(Bx, Bxx, Along::X0, p);
            auto [t2, mag2] = fd_vs(Br, Brr, Along::R, p);
            double t3 = (m - 1) * eval(Br, p) / p.r,
                   t4 = -(m - 1) * eval(B, p) / (p.r * p.r);
            return PointResidual{std::abs(t1 + t2 + t3 + t4),
                                 1 + mag1 + mag2 + std::abs(t3) + std::abs(t4)};
        });
    }
    return reports;
}

namespace {

double simpson_rule(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double mid, double fmid, double whole,
                     double tol, int depth) {
    double lm = 0.5 * (a + mid), rm = 0.5 * (mid + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson_rule(a, fa, mid, fmid, flm);
    double right = simpson_rule(mid, fmid, b, fb, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, mid, fmid, lm, flm, left, tol / 2, depth - 1) +
           adaptive_step(f, mid, fmid, b, fb, rm, frm, right, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol) {
    double mid = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fmid = f(mid);
    double whole = simpson_rule(a, fa, b, fb, fmid);
    return adaptive_step(f, a, fa, b, fb, mid, fmid, whole, abs_tol, 60);
}

double bump(double r, double support) {
    double t = (r / support) * (r / support);
    if (t >= 1.0) return 0.0;
    return std::exp(-t / (1.0 - t));
}

double kernel_boundary_integral(const AxialExpr& A, int m, double x0,
                                const std::function<double(double)>& phi,
                                double support) {
    if (!(x0 > 0.0)) throw EvalError("kernel_boundary_integral: x0 must be > 0");
    const double sigma = (m == 2) ? 2 * M_PI : 4 * M_PI;
    const double theta_max = std::atan(support / x0);
    auto integrand = [&](double theta) {
        if (theta <= 0.0) return 0.0;
        double r = x0 * std::tan(theta);
        if (!(r > 0.0) || !std::isfinite(r)) return 0.0;
        double cosv = std::cos(theta);
        double jac = x0 / (cosv * cosv);  // dr/dtheta
        return sigma * std::pow(r, m - 1) * eval(A, {x0, r}) * phi(r) * jac;
    };
    return adaptive_simpson(integrand, 0.0, theta_max, 1e-9);
}

double poisson_mass(int m, double x0) {
    AxialExpr P = (m == 2) ? AxialExpr::term(Coefficient::pi_power(1, 2, -1), 1, 0, -3)
                           : AxialExpr::term(Coefficient::pi_power(1, 1, -2), 1, 0, -4);
    return kernel_boundary_integral(P, m, x0, [](double) { return 1.0; }, 1e7 * x0);
}

std::vector<double> delta_quadrature(int m, const std::vector<double>& x0s,
                                     const std::function<double(double)>& phi,
                                     double support) {
    AxialExpr P = (m == 2) ? AxialExpr::term(Coefficient::pi_power(1, 2, -1), 1, 0, -3)
                           : AxialExpr::term(Coefficient::pi_power(1, 1, -2), 1, 0, -4);
    std::vector<double> out;
    out.reserve(x0s.size());
    for (double x0 : x0s)
        out.push_back(kernel_boundary_integral(P, m, x0, phi, support));
    return out;
}

}  // namespace halfpot
