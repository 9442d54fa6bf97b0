#include "numeric.hpp"

#include "fixtures.hpp"
#include "gegenbauer.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace halfpot;

TEST_CASE("pointwise evaluation") {
    // A_{-1} (m=2) at (1,1): (1/2pi) 2^{-3/2}
    double v = eval(fixtures::downstream_A_m2(1), {1.0, 1.0});
    CHECK(v == doctest::Approx(1.0 / (2 * M_PI) * std::pow(2.0, -1.5)).epsilon(1e-12));
    CHECK(v == doctest::Approx(0.0562697698).epsilon(1e-8));

    CHECK(eval(AxialExpr::term(Coefficient::integer(1), 0, 0, 0), {3.7, 0.2}) == 1.0);

    // A_1 (m=3) at (1,1): (1/2pi^2) arctan(1) = 1/(8pi)
    CHECK(eval(fixtures::upstream_A_m3(1), {1.0, 1.0}) ==
          doctest::Approx(1.0 / (8 * M_PI)).epsilon(1e-12));

    CHECK_THROWS_AS(eval(fixtures::downstream_A_m2(1), {1.0, 0.0}), EvalError);
    CHECK_THROWS_AS(eval(fixtures::downstream_A_m2(1), {-1.0, 1.0}), EvalError);
}

TEST_CASE("overflow is reported instead of returning infinity") {
    AxialExpr steep = AxialExpr::term(Coefficient::integer(1), 0, -800, 0);
    CHECK_THROWS_AS(eval(steep, {1.0, 1e-300}), EvalError);
}

TEST_CASE("three-point central differences converge at second order") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> na(0, 2), nb(-2, 2), nal(-3, 3), natom(0, 3);
    std::vector<double> ratios;
    for (int i = 0; i < 40; ++i) {
        AxialExpr e({{Coefficient::rational(2, 3),
                      TermKey{static_cast<Atom>(natom(rng)), na(rng), nb(rng), nal(rng)}},
                     {Coefficient::rational(-1, 2),
                      TermKey{static_cast<Atom>(natom(rng)), na(rng), nb(rng), nal(rng)}}});
        AxialExpr de = diff_x0(e);
        SamplePoint p{1.3, 0.8};
        auto f = [&](double x) { return eval(e, {x, p.r}); };
        double exact = eval(de, p);
        double e1 = std::abs(fd1_order2(f, p.x0, 1e-2) - exact);
        double e2 = std::abs(fd1_order2(f, p.x0, 5e-3) - exact);
        double e4 = std::abs(fd1_order2(f, p.x0, 2.5e-3) - exact);
        if (e2 > 1e-12 && e4 > 1e-13) {
            ratios.push_back(e1 / e2);
            ratios.push_back(e2 / e4);
        }
    }
    REQUIRE(ratios.size() > 20);
    std::sort(ratios.begin(), ratios.end());
    double median = ratios[ratios.size() / 2];
    CHECK(median > 3.4);
    CHECK(median < 4.6);
}

TEST_CASE("identical symbolic expressions evaluate identically to roundoff") {
    // the two downstream routes agree exactly, so their evaluations agree to
    // double precision on a well-conditioned set
    Chain c2 = Chain::build(2, -4, 6);
    Chain c3 = Chain::build(3, -4, 6);
    auto points = log_grid(0.5, 2.0, 5, 5, 0.0);
    for (const Chain* c : {&c2, &c3}) {
        for (int level = c->lo() + 1; level <= c->hi(); ++level) {
            const AxialExpr dx = diff_x0(c->at(level).pair.A);
            const AxialExpr& prev = c->at(level - 1).pair.A;
            for (const auto& p : points)
                CHECK(std::abs(eval(dx, p) - eval(prev, p)) < 1e-9);
        }
    }
}

TEST_CASE("residual of an exactly-zero identity is exactly zero") {
    AxialExpr zero;
    auto f = [&](double x) { return eval(zero, {x, 1.0}); };
    CHECK(fd1(f, 1.0, 1e-4) == 0.0);
    CHECK(fd1_order2(f, 1.0, 1e-4) == 0.0);
}

TEST_CASE("numeric identity suite stays under tolerance on the spec grid") {
    const double h = 1e-4;
    auto points = log_grid(1e-2, 1e2, 10, 10, 10 * h);
    REQUIRE(points.size() == 100);
    for (int m : {2, 3}) {
        Chain c = Chain::build(m, -5, 6);
        auto reports = numeric_identity_suite(c, -4, 6, points, h, 1e-6);
        for (const auto& rep : reports) {
            INFO(rep.identity << " at level " << rep.level << " residual "
                              << rep.max_rel_residual);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("adaptive quadrature on a known integral") {
    double v = adaptive_simpson([](double x) { return std::exp(-x); }, 0.0, 10.0, 1e-10);
    CHECK(v == doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-9));
}

TEST_CASE("bump test function") {
    CHECK(bump(0.0, 50.0) == 1.0);
    CHECK(bump(50.0, 50.0) == 0.0);
    CHECK(bump(60.0, 50.0) == 0.0);
    CHECK(bump(25.0, 50.0) > 0.0);
    CHECK(bump(25.0, 50.0) < 1.0);
}

TEST_CASE("poisson kernel has unit mass") {
    for (int m : {2, 3})
        for (double x0 : {1.0, 0.1, 0.01})
            CHECK(std::abs(poisson_mass(m, x0) - 1.0) < 1e-6);
}

TEST_CASE("kernel integrals against the zero test function vanish") {
    auto zero = [](double) { return 0.0; };
    auto vals = delta_quadrature(2, {1.0, 0.1, 0.01}, zero, 50.0);
    for (double v : vals) CHECK(v == 0.0);
}

TEST_CASE("delta approximation converges to phi(0)") {
    const double support = 50.0;
    auto phi = [&](double r) { return bump(r, support); };
    for (int m : {2, 3}) {
        auto vals = delta_quadrature(m, {1.0, 0.1, 0.01}, phi, support);
        CHECK(std::abs(vals[0] - 1.0) > std::abs(vals[1] - 1.0));
        CHECK(std::abs(vals[1] - 1.0) > std::abs(vals[2] - 1.0));
        CHECK(std::abs(vals[2] - 1.0) < 1e-3);
    }
}
