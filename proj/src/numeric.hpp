#pragma once

#include "chain.hpp"

#include <functional>

namespace halfpot {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SamplePoint {
    double x0 = 1.0;
    double r = 1.0;
};

// IEEE double evaluation on the open quadrant; throws EvalError for points
// outside it or when the result is not finite.
double eval(const AxialExpr& e, const SamplePoint& p);
double eval(const RadialDensity& d, double r);

// nx * nr log-spaced grid over [lo, hi]^2, excluding rows with r < min_r.
std::vector<SamplePoint> log_grid(double lo, double hi, int nx, int nr,
                                  double min_r);

// Central differences: seven-point O(h^6) and three-point O(h^2).
double fd1(const std::function<double(double)>& f, double x, double h);
double fd1_order2(const std::function<double(double)>& f, double x, double h);

struct ResidualReport {
    std::string identity;
    int level = 0;
    double h = 0;
    double max_rel_residual = 0;
    double tolerance = 0;
    bool pass = false;
};

// Finite-difference residuals of the per-level PDE identities over the
// sample set, for levels [lo, hi] clamped to the chain range.
// First-derivative identities compare a high-order central difference of the
// evaluated potential against the symbolically differentiated neighbour; the
// Laplacian and monogenicity identities are formed as central differences of
// the exact symbolic gradients, which keeps both truncation and roundoff
// well under tolerance across the grid.  The relative scale at a point is
// 1 + the magnitudes of the constituent terms.
std::vector<ResidualReport> numeric_identity_suite(
    const Chain& chain, int lo, int hi, const std::vector<SamplePoint>& points,
    double h, double tolerance);

// Adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol);

// Smooth compactly supported test function, phi(0) = 1, support [0, R).
double bump(double r, double support);

// integral over R^m of A(x0, .) phi(|x|) dx, by radial quadrature with the
// substitution r = x0 tan(theta) so the kernel peak is O(1)-scale.
double kernel_boundary_integral(const AxialExpr& A, int m, double x0,
                                const std::function<double(double)>& phi,
                                double support);

// Total mass of the Poisson kernel A_{-1}(x0, .); equals 1 for every x0.
double poisson_mass(int m, double x0);

// integral of A_{-1}(x0, .) against phi for each x0; converges to phi(0).
std::vector<double> delta_quadrature(int m, const std::vector<double>& x0s,
                                     const std::function<double(double)>& phi,
                                     double support);

}  // namespace halfpot
