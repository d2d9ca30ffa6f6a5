#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rotorsym/fourier.hpp"

using namespace rotorsym::domain;

namespace {
constexpr double kPi = 3.14159265358979323846;

FourierProfile sin_profile() {
    FourierProfile p;
    p.sin_coeffs = {1.0};
    return p;
}
} // namespace

TEST_CASE("constant profile evaluates, differentiates, integrates") {
    FourierProfile p;
    p.c0 = 2.0 * kPi;
    CHECK(profile_eval(p, 0.37) == 2.0 * kPi);
    CHECK(profile_derivative(p, 0.37) == 0.0);
    CHECK(profile_antiderivative(p, 0.5) == Catch::Approx(kPi).epsilon(1e-14));
    CHECK(p.is_zero() == false);
    CHECK(FourierProfile{}.is_zero());
}

TEST_CASE("single sine harmonic against hand values") {
    const FourierProfile p = sin_profile();
    // sin(2 pi t) at t = 1/4
    CHECK(profile_eval(p, 0.25) == Catch::Approx(1.0).margin(1e-15));
    // derivative 2 pi cos(2 pi t) vanishes there
    CHECK(profile_derivative(p, 0.25) == Catch::Approx(0.0).margin(1e-13));
    // integral (1 - cos(2 pi t)) / (2 pi)
    CHECK(profile_antiderivative(p, 0.25) ==
          Catch::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(profile_antiderivative(p, 1.0) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("antiderivative vanishes at zero and matches quadrature") {
    FourierProfile p;
    p.c0 = 0.7;
    p.cos_coeffs = {0.3, -0.2};
    p.sin_coeffs = {1.1, 0.0, 0.4};
    CHECK(profile_antiderivative(p, 0.0) == 0.0);
    // composite Simpson on [0, t] as an independent oracle
    const double t = 0.613;
    const int n = 2000;
    double acc = profile_eval(p, 0.0) + profile_eval(p, t);
    for (int i = 1; i < n; ++i) {
        acc += profile_eval(p, t * i / n) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    acc *= t / (3.0 * n);
    CHECK(profile_antiderivative(p, t) == Catch::Approx(acc).epsilon(1e-10));
}

TEST_CASE("derivative matches central differences") {
    FourierProfile p;
    p.c0 = -0.4;
    p.cos_coeffs = {0.9, 0.1};
    p.sin_coeffs = {-0.6};
    const double h = 1e-6;
    for (double t : {0.0, 0.21, 0.5, 0.93}) {
        const double fd =
            (profile_eval(p, t + h) - profile_eval(p, t - h)) / (2.0 * h);
        CHECK(profile_derivative(p, t) == Catch::Approx(fd).margin(1e-7));
    }
}

TEST_CASE("profile algebra: scale and sum") {
    FourierProfile a;
    a.c0 = 1.0;
    a.cos_coeffs = {2.0};
    FourierProfile b;
    b.c0 = -0.5;
    b.sin_coeffs = {0.0, 3.0};
    const FourierProfile s = profile_sum(a, b);
    const FourierProfile sc = profile_scale(2.0, b);
    for (double t : {0.1, 0.37, 0.77}) {
        CHECK(profile_eval(s, t) ==
              Catch::Approx(profile_eval(a, t) + profile_eval(b, t)).epsilon(1e-14));
        CHECK(profile_eval(sc, t) ==
              Catch::Approx(2.0 * profile_eval(b, t)).epsilon(1e-14));
    }
}

TEST_CASE("squared sine expands into the double harmonic") {
    const FourierProfile sq = profile_product(sin_profile(), sin_profile());
    // sin^2(2 pi t) = 1/2 - cos(4 pi t)/2
    CHECK(sq.c0 == Catch::Approx(0.5).epsilon(1e-14));
    REQUIRE(sq.cos_coeffs.size() == 2);
    CHECK(sq.cos_coeffs[0] == Catch::Approx(0.0).margin(1e-15));
    CHECK(sq.cos_coeffs[1] == Catch::Approx(-0.5).epsilon(1e-14));
    for (double t : {0.05, 0.33, 0.71}) {
        const double direct = std::sin(2.0 * kPi * t);
        CHECK(profile_eval(sq, t) ==
              Catch::Approx(direct * direct).margin(1e-14));
    }
}

TEST_CASE("product of mixed profiles matches pointwise product") {
    FourierProfile a;
    a.c0 = 0.8;
    a.cos_coeffs = {1.2, -0.3};
    a.sin_coeffs = {0.5};
    FourierProfile b;
    b.c0 = -1.1;
    b.cos_coeffs = {0.4};
    b.sin_coeffs = {-0.9, 0.2};
    const FourierProfile prod = profile_product(a, b);
    for (int i = 0; i <= 20; ++i) {
        const double t = i / 20.0;
        CHECK(profile_eval(prod, t) ==
              Catch::Approx(profile_eval(a, t) * profile_eval(b, t)).margin(1e-12));
    }
    // products stay closed under differentiation/integration machinery
    CHECK(profile_antiderivative(prod, 1.0) ==
          Catch::Approx(prod.c0).epsilon(1e-12));
}
