#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rotorsym/orbits.hpp"
#include "rotorsym/transforms.hpp"

using namespace rotorsym;
using namespace rotorsym::domain;
using integrate::Picture;
using orbits::Functional;
using orbits::Method;

namespace {
constexpr double kPi = 3.14159265358979323846;

ProblemSpec merry(double c0) {
    FourierProfile omega;
    omega.c0 = c0;
    return transforms::make_merry_go_round(omega);
}

ProblemSpec free_particle() {
    ProblemSpec spec;
    spec.potential = make_zero_potential();
    spec.scalar = make_zero_scalar();
    return spec;
}

// Confining quartic well, no magnetic term. Unlike the carousel family its
// time-one map is nonlinear, so Newton cannot finish in one step.
ProblemSpec quartic_well() {
    FourierProfile quarter;
    quarter.c0 = 0.25;
    ProblemSpec spec;
    spec.potential = make_zero_potential();
    spec.scalar = make_polynomial_scalar({{4, 0, quarter}, {0, 4, quarter}});
    return spec;
}

DiscreteLoop perturbed_circle(int n, double amp, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<Vec2> q;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        q.push_back({std::cos(2.0 * kPi * t) + u(rng),
                     -std::sin(2.0 * kPi * t) + u(rng)});
    }
    return make_configuration_loop(std::move(q));
}
} // namespace

TEST_CASE("shooting lands on the carousel's plane of closed orbits") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const auto r = orbits::find_orbit_shooting(
        spec, Picture::Canonical, Vec4(0.9, 0.1, 0.05, -0.05));
    CHECK(r.converged);
    CHECK(r.fixed_point_defect < 1e-9);
    CHECK(r.method == Method::Shooting);
    CHECK(r.picture == Picture::Canonical);
    // every fixed point of this map has vanishing canonical momentum, and
    // the least-squares step keeps the q guess
    CHECK(norm_inf(r.z_star.p()) < 1e-9);
    CHECK(norm_inf(r.z_star.q() - Vec2{0.9, 0.1}) < 1e-6);
    CHECK(r.loop.n() == 256);
    CHECK(r.force_defect < 1e-2);
    CHECK(r.gradient_defect < 1e-4);
}

TEST_CASE("shooting on the free particle kills the momentum") {
    // drift destroys periodicity unless the momentum vanishes
    const auto r = orbits::find_orbit_shooting(
        free_particle(), Picture::Canonical, Vec4(0.0, 0.0, 0.1, 0.0));
    CHECK(r.converged);
    CHECK(norm_inf(r.z_star.p()) < 1e-10);
    CHECK(r.fixed_point_defect < 1e-12);
}

TEST_CASE("unit-frequency carousel only closes up at the origin") {
    // omega = 1 is non-resonant with the period: the only fixed point is 0
    const auto r = orbits::find_orbit_shooting(
        merry(1.0), Picture::Canonical, Vec4(0.4, 0.2, 0.1, -0.1), 1e-9, 50);
    CHECK(r.converged);
    CHECK(norm_inf(r.z_star.q()) < 1e-8);
    CHECK(norm_inf(r.z_star.p()) < 1e-8);
}

TEST_CASE("iteration starvation is reported, not thrown") {
    const auto r = orbits::find_orbit_shooting(
        quartic_well(), Picture::Canonical, Vec4(1.5, -1.2, 0.7, 0.9), 1e-9, 1);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations <= 1);
    CHECK(r.fixed_point_defect > 1e-9);
}

TEST_CASE("variational search refines a perturbed circle") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const DiscreteLoop guess = perturbed_circle(256, 0.01, 2024);
    const auto r = orbits::find_orbit_variational(spec, Functional::Classical, guess);
    CHECK(r.converged);
    CHECK(r.method == Method::Variational);
    CHECK(r.gradient_defect < 1e-8);
    CHECK(r.loop.n() == 256);
    // the refined loop still goes around the unit circle
    for (const Vec2& q : r.loop.q)
        CHECK(norm(q) == Catch::Approx(1.0).margin(0.05));
}

TEST_CASE("symplectic variational search recovers the orbit momenta") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const int n = 128;
    DiscreteLoop guess = perturbed_circle(n, 0.005, 77);
    std::vector<Vec2> p;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        // rough twisted momentum guess: qdot of the unperturbed circle
        p.push_back(-2.0 * kPi *
                    j0(Vec2{std::cos(2.0 * kPi * t), -std::sin(2.0 * kPi * t)}));
    }
    guess = make_phase_loop(std::move(guess.q), std::move(p));
    const auto r =
        orbits::find_orbit_variational(spec, Functional::Symplectic, guess);
    CHECK(r.converged);
    CHECK(r.gradient_defect < 1e-8);
    REQUIRE(r.loop.is_phase());
    // the first discrete Euler-Hamilton equation: p tracks the central
    // difference velocity of the q samples
    for (int i = 0; i < n; ++i) {
        const auto idx = [n](int j) {
            return static_cast<std::size_t>(((j % n) + n) % n);
        };
        const Vec2 v = (static_cast<double>(n) / 2.0) *
                       (r.loop.q[idx(i + 1)] - r.loop.q[idx(i - 1)]);
        CHECK(norm_inf(r.loop.p[idx(i)] - v) < 1e-2);
    }
}

TEST_CASE("functionals demand the matching loop kind") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const DiscreteLoop cfg = perturbed_circle(32, 0.0, 1);
    CHECK_THROWS_AS(
        orbits::find_orbit_variational(spec, Functional::Symplectic, cfg),
        std::invalid_argument);
    // the classical functional ignores momenta, so a phase-loop guess (a
    // shooting finder's stored loop, say) seeds it by its q samples
    DiscreteLoop phase = perturbed_circle(256, 0.0, 1);
    phase.p.assign(phase.q.size(), Vec2{0.0, 0.0});
    const auto r =
        orbits::find_orbit_variational(spec, Functional::Classical, phase);
    CHECK(r.converged);
    CHECK_FALSE(r.loop.is_phase());
    CHECK(r.loop.n() == 256);
}

TEST_CASE("certificates recompute to the stored defects") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const auto shot = orbits::find_orbit_shooting(
        spec, Picture::Canonical, Vec4(0.9, 0.1, 0.05, -0.05));
    CHECK(orbits::certificate_discrepancy(spec, shot) <= 1e-12);
    const auto var = orbits::find_orbit_variational(
        spec, Functional::Classical, perturbed_circle(64, 0.01, 2024));
    CHECK(orbits::certificate_discrepancy(spec, var) <= 1e-12);
}

TEST_CASE("shooting and variational solutions certify each other") {
    const ProblemSpec spec = merry(2.0 * kPi);
    // shooting result: its sampled loop nearly kills the classical gradient
    const auto shot = orbits::find_orbit_shooting(
        spec, Picture::Canonical, Vec4(0.9, 0.1, 0.05, -0.05));
    CHECK(shot.gradient_defect < 1e-6);
    // variational result: seeding the flow at its initial state returns
    // to the start, i.e. a small fixed-point defect
    const auto var = orbits::find_orbit_variational(
        spec, Functional::Classical, perturbed_circle(256, 0.01, 2024));
    CHECK(var.fixed_point_defect < 1e-6);
}

TEST_CASE("eliminating the scalar does not move the force-picture orbit") {
    // The second-order equation of motion is gauge invariant, so shooting
    // in the force picture sees the same map before and after elimination.
    // (The one-window classical functional is NOT invariant: the absorbed
    // gradient is only twist-periodic and adds a boundary term that moves
    // its critical loops, see the action identity in the transform tests.)
    const ProblemSpec spec = merry(2.0 * kPi);
    const ProblemSpec elim = transforms::eliminate_scalar(spec);
    const Vec4 guess(0.9, 0.1, 0.1, -0.6);
    const auto a = orbits::find_orbit_shooting(spec, Picture::Force, guess);
    const auto b = orbits::find_orbit_shooting(elim, Picture::Force, guess);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK(norm_inf(a.z_star - b.z_star) < 1e-9);
    REQUIRE(a.loop.n() == b.loop.n());
    for (int i = 0; i < a.loop.n(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        CHECK(norm_inf(a.loop.q[k] - b.loop.q[k]) < 1e-9);
    }
}

TEST_CASE("multistart is deterministic and never worse than its first seed") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const Vec4 guess(0.5, 0.5, 0.9, -0.9);
    const auto a = orbits::find_orbit_multistart(spec, Picture::Canonical, guess,
                                                 1e-9, 25, 4);
    const auto b = orbits::find_orbit_multistart(spec, Picture::Canonical, guess,
                                                 1e-9, 25, 4);
    CHECK(a.converged);
    CHECK(norm_inf(a.z_star - b.z_star) == 0.0);
    CHECK(a.fixed_point_defect == b.fixed_point_defect);
    const auto single =
        orbits::find_orbit_shooting(spec, Picture::Canonical, guess, 1e-9, 25);
    CHECK(a.converged >= single.converged);
    if (a.converged == single.converged)
        CHECK(a.fixed_point_defect <= single.fixed_point_defect);
}

TEST_CASE("seed states read loops in every picture") {
    const ProblemSpec spec = merry(2.0 * kPi);
    const int n = 128;
    std::vector<Vec2> q, p;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        const Vec2 qi{std::cos(2.0 * kPi * t), -std::sin(2.0 * kPi * t)};
        q.push_back(qi);
        p.push_back(-2.0 * kPi * j0(qi));
    }
    const DiscreteLoop phase = make_phase_loop(q, p);
    const DiscreteLoop cfg = make_configuration_loop(q);

    // twisted seed takes p[0] directly
    const Vec4 tw = orbits::seed_state_from_loop(spec, phase, Picture::Twisted);
    CHECK(norm_inf(tw.q() - Vec2{1.0, 0.0}) < 1e-14);
    CHECK(norm_inf(tw.p() - Vec2{0.0, -2.0 * kPi}) < 1e-12);
    // canonical seed adds A_0(q_0): here A_0 = -qdot, so p vanishes
    const Vec4 can = orbits::seed_state_from_loop(spec, phase, Picture::Canonical);
    CHECK(norm_inf(can.p()) < 1e-12);
    // configuration loops reconstruct qdot with the high-order stencil
    const Vec4 st = orbits::seed_state_from_loop(spec, cfg, Picture::Twisted);
    CHECK(norm_inf(st.p() - Vec2{0.0, -2.0 * kPi}) < 1e-5);
}

TEST_CASE("orbit results serialize with their defects") {
    const auto r = orbits::find_orbit_shooting(
        free_particle(), Picture::Canonical, Vec4(0.1, 0.2, 0.0, 0.0));
    const std::string j = orbits::orbit_result_json(r, "out.loop.csv");
    CHECK(j.find("\"method\"") != std::string::npos);
    CHECK(j.find("shooting") != std::string::npos);
    CHECK(j.find("\"converged\": true") != std::string::npos);
    CHECK(j.find("\"fixed_point\"") != std::string::npos);
    CHECK(j.find("out.loop.csv") != std::string::npos);
}
