#include "exact.hpp"

#include <doctest.h>

#include <random>

using namespace halfpot;

TEST_CASE("rationals stay reduced with positive denominator") {
    Rational q = make_rational(6, -9);
    CHECK(boost::multiprecision::numerator(q) == -2);
    CHECK(boost::multiprecision::denominator(q) == 3);
    Rational sum = make_rational(1, 6) + make_rational(1, 3);
    CHECK(boost::multiprecision::numerator(sum) == 1);
    CHECK(boost::multiprecision::denominator(sum) == 2);
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(make_rational(3, 2)) == "3/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);

    for (long n = 1; n <= 25; ++n)
        CHECK(double_factorial(n) == n * double_factorial(n - 2));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic_number(0) == 0);
    CHECK(harmonic_number(2) == make_rational(3, 2));
    CHECK(harmonic_number(4) == make_rational(25, 12));
    for (long k = 1; k <= 30; ++k)
        CHECK(harmonic_number(k) - harmonic_number(k - 1) == Rational(1, k));
}

TEST_CASE("coefficient arithmetic basics") {
    Coefficient half = Coefficient::rational(1, 2);
    CHECK(half + half == Coefficient::integer(1));
    Coefficient c = Coefficient::pi_power(1, 8, -3);
    CHECK(c + Coefficient() == c);
    CHECK((c - c).is_zero());
    CHECK(c.to_string() == "1/8*pi^-3");
    Coefficient mixed = Coefficient::pi_power(-1, 2, 0) + Coefficient::pi_power(1, 8, -3);
    CHECK(mixed.to_string() == "-1/2*pi^0 + 1/8*pi^-3");
    CHECK(Coefficient().to_string() == "0");
}

TEST_CASE("beta recursion step lands on the closed form value") {
    // beta_2 = -(1/2pi)(1/2)(beta_0 - alpha_0) with alpha_0 = -1/(2 pi^2)
    Coefficient alpha0 = Coefficient::pi_power(-1, 2, -2);
    Coefficient beta0;
    Coefficient beta2 = Coefficient::pi_power(-1, 2, -1) *
                        Coefficient::rational(1, 2) *
                        (beta0 - alpha0 * Rational(1));
    CHECK(beta2 == Coefficient::pi_power(-1, 8, -3));
}

TEST_CASE("coefficients form a commutative ring") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), ex(-3, 3), n(0, 3);
    auto random_coeff = [&] {
        Coefficient c;
        int terms = n(rng);
        for (int i = 0; i < terms; ++i)
            c += Coefficient(Rational(num(rng), den(rng)), ex(rng));
        return c;
    };
    for (int i = 0; i < 200; ++i) {
        Coefficient a = random_coeff(), b = random_coeff(), c = random_coeff();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Coefficient::integer(1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("coefficient to_double") {
    CHECK(Coefficient::pi_power(1, 2, 1).to_double() == doctest::Approx(M_PI / 2));
    CHECK(Coefficient::pi_power(3, 4, -2).to_double() ==
          doctest::Approx(0.75 / (M_PI * M_PI)));
}
