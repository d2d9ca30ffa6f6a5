#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <random>

#include "rotorsym/action.hpp"
#include "rotorsym/threads.hpp"
#include "rotorsym/transforms.hpp"

using namespace rotorsym;
using namespace rotorsym::domain;
namespace action = rotorsym::action;

namespace {
constexpr double kPi = 3.14159265358979323846;

ProblemSpec merry_2pi() {
    FourierProfile omega;
    omega.c0 = 2.0 * kPi;
    return transforms::make_merry_go_round(omega);
}

ProblemSpec free_particle() {
    ProblemSpec spec;
    spec.potential = make_zero_potential();
    spec.scalar = make_zero_scalar();
    return spec;
}

// Clockwise unit circle, the orbit of the 2 pi carousel.
DiscreteLoop circle_config(int n) {
    std::vector<Vec2> q;
    q.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        q.push_back({std::cos(2.0 * kPi * t), -std::sin(2.0 * kPi * t)});
    }
    return make_configuration_loop(std::move(q));
}

DiscreteLoop circle_phase(int n, bool orbit_momentum) {
    DiscreteLoop cfg = circle_config(n);
    std::vector<Vec2> p(cfg.q.size());
    if (orbit_momentum) {
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] = -2.0 * kPi * j0(cfg.q[i]);   // p = qdot on the orbit
    }
    return make_phase_loop(std::move(cfg.q), std::move(p));
}

DiscreteLoop random_phase_loop(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<Vec2> q, p;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        q.push_back({std::cos(2.0 * kPi * t) + 0.3 * u(rng), u(rng)});
        p.push_back({u(rng), u(rng)});
    }
    return make_phase_loop(std::move(q), std::move(p));
}

bool bits_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}
} // namespace

TEST_CASE("classical action of the carousel orbit vanishes") {
    // kinetic, coupling and well terms cancel to fourth order already
    CHECK(std::abs(action::classical_action(merry_2pi(), circle_config(512))) <
          1e-4);
    CHECK(std::abs(action::classical_action(merry_2pi(), circle_config(512))) <
          1e-6);
}

TEST_CASE("classical action of a resting point is zero") {
    const DiscreteLoop still =
        make_configuration_loop(std::vector<Vec2>(16, Vec2{0.7, -0.2}));
    CHECK(action::classical_action(free_particle(), still) == 0.0);
}

TEST_CASE("free circle action approaches 2 pi^2 from below") {
    const double a1024 =
        action::classical_action(free_particle(), circle_config(1024));
    CHECK(a1024 == Catch::Approx(2.0 * kPi * kPi).margin(1e-4));
    const double a512 =
        action::classical_action(free_particle(), circle_config(512));
    CHECK(a512 < a1024);
    CHECK(a1024 < 2.0 * kPi * kPi);
}

TEST_CASE("symplectic action oracles") {
    // along the orbit with p = qdot every panel cancels exactly
    CHECK(std::abs(action::symplectic_action(merry_2pi(), circle_phase(512, true))) <
          1e-10);
    // with p frozen at zero only coupling and potential remain: -2 pi^2
    CHECK(action::symplectic_action(merry_2pi(), circle_phase(1024, false)) ==
          Catch::Approx(-2.0 * kPi * kPi).margin(1e-4));
}

TEST_CASE("loop preconditions are enforced") {
    DiscreteLoop tiny;
    tiny.q = {Vec2{1, 0}, Vec2{0, 1}, Vec2{-1, 0}};
    CHECK_THROWS_AS(action::classical_action(free_particle(), tiny),
                    std::invalid_argument);
    CHECK_THROWS_AS(action::symplectic_action(merry_2pi(), circle_config(64)),
                    std::invalid_argument);
    CHECK_THROWS_AS(action::symplectic_action_gradient(merry_2pi(), circle_config(64)),
                    std::invalid_argument);
    // classical operations accept phase loops, ignoring p
    CHECK(action::classical_action(merry_2pi(), circle_phase(64, true)) ==
          action::classical_action(merry_2pi(), circle_config(64)));
}

TEST_CASE("gradients vanish at the orbit and shrink with refinement") {
    const ProblemSpec spec = merry_2pi();
    auto sup = [](const std::vector<Vec2>& g) {
        double m = 0.0;
        for (Vec2 v : g) m = std::max(m, norm_inf(v));
        return m;
    };
    const double g256 = sup(action::classical_action_gradient(spec, circle_config(256)));
    const double g512 = sup(action::classical_action_gradient(spec, circle_config(512)));
    CHECK(g256 < 1e-8);
    CHECK(g512 * 3.5 < g256);
}

TEST_CASE("classical gradient matches finite differences") {
    const ProblemSpec spec = merry_2pi();
    DiscreteLoop loop = random_phase_loop(16, 7001);
    loop.p.clear();
    const auto grad = action::classical_action_gradient(spec, loop);
    REQUIRE(grad.size() == 16);
    const double h = 1e-6;
    for (int j : {0, 5, 11, 15}) {
        for (int comp = 0; comp < 2; ++comp) {
            DiscreteLoop lp = loop, lm = loop;
            auto& cp = comp == 0 ? lp.q[static_cast<std::size_t>(j)].x
                                 : lp.q[static_cast<std::size_t>(j)].y;
            auto& cm = comp == 0 ? lm.q[static_cast<std::size_t>(j)].x
                                 : lm.q[static_cast<std::size_t>(j)].y;
            cp += h;
            cm -= h;
            const double fd = (action::classical_action(spec, lp) -
                               action::classical_action(spec, lm)) / (2.0 * h);
            const double g = comp == 0 ? grad[static_cast<std::size_t>(j)].x
                                       : grad[static_cast<std::size_t>(j)].y;
            CHECK(g == Catch::Approx(fd).margin(1e-5));
        }
    }
}

TEST_CASE("symplectic gradient matches finite differences") {
    const ProblemSpec spec = merry_2pi();
    const DiscreteLoop loop = random_phase_loop(16, 7002);
    const auto grad = action::symplectic_action_gradient(spec, loop);
    REQUIRE(grad.dq.size() == 16);
    REQUIRE(grad.dp.size() == 16);
    const double h = 1e-6;
    for (int j : {0, 3, 9, 15}) {
        const auto k = static_cast<std::size_t>(j);
        for (int slot = 0; slot < 4; ++slot) {
            DiscreteLoop lp = loop, lm = loop;
            Vec2& vp = slot < 2 ? lp.q[k] : lp.p[k];
            Vec2& vm = slot < 2 ? lm.q[k] : lm.p[k];
            (slot % 2 == 0 ? vp.x : vp.y) += h;
            (slot % 2 == 0 ? vm.x : vm.y) -= h;
            const double fd = (action::symplectic_action(spec, lp) -
                               action::symplectic_action(spec, lm)) / (2.0 * h);
            const Vec2 gv = slot < 2 ? grad.dq[k] : grad.dp[k];
            CHECK((slot % 2 == 0 ? gv.x : gv.y) == Catch::Approx(fd).margin(1e-5));
        }
    }
}

TEST_CASE("window pairing of the eliminated carousel is -4 pi^2 at every shift") {
    const ProblemSpec elim = transforms::eliminate_scalar(merry_2pi());
    const DiscreteLoop circle = circle_config(512);
    double first = 0.0;
    for (int k = 0; k <= 5; ++k) {
        const double v = action::window_shift_value(elim, circle, k);
        CHECK(v == Catch::Approx(-4.0 * kPi * kPi).margin(2e-3));
        if (k == 0)
            first = v;
        else
            CHECK(std::abs(v - first) < 1e-9);
    }
}

TEST_CASE("window values are shift-independent on arbitrary loops") {
    FourierProfile omega;
    omega.c0 = 2.0 * kPi;
    omega.sin_coeffs = {1.0};
    const ProblemSpec elim =
        transforms::eliminate_scalar(transforms::make_merry_go_round(omega));
    const DiscreteLoop loop = random_phase_loop(128, 7003);
    const double v0 = action::window_shift_value(elim, loop, 0);
    for (int k : {1, 3, 5}) {
        CHECK(std::abs(action::window_shift_value(elim, loop, k) - v0) < 1e-10);
    }
    // the potential overload agrees with the spec overload
    CHECK(action::window_shift_value(*elim.potential, loop, 2) ==
          action::window_shift_value(elim, loop, 2));
}

TEST_CASE("force residual separates orbits from non-orbits") {
    const ProblemSpec spec = merry_2pi();
    CHECK(action::force_residual(spec, circle_config(512)) < 1e-2);
    // resting free particle solves its force equation exactly
    const DiscreteLoop still =
        make_configuration_loop(std::vector<Vec2>(32, Vec2{0.4, 0.4}));
    CHECK(action::force_residual(free_particle(), still) == 0.0);
    // the counter-rotating circle is far from solving it
    std::vector<Vec2> q;
    for (int i = 0; i < 512; ++i) {
        const double t = i / 512.0;
        q.push_back({std::cos(2.0 * kPi * t), std::sin(2.0 * kPi * t)});
    }
    CHECK(action::force_residual(spec, make_configuration_loop(std::move(q))) > 0.1);
}

TEST_CASE("parallel kernels reproduce the serial reference") {
    FourierProfile omega;
    omega.c0 = 2.0 * kPi;
    omega.sin_coeffs = {1.0};
    const ProblemSpec spec = transforms::make_merry_go_round(omega);
    const DiscreteLoop loop = random_phase_loop(256, 7004);

    const double cv = action::classical_action(spec, loop);
    const double sv = action::symplectic_action(spec, loop);
    CHECK(cv == Catch::Approx(action::reference::classical_action(spec, loop))
                    .epsilon(1e-12));
    CHECK(sv == Catch::Approx(action::reference::symplectic_action(spec, loop))
                    .epsilon(1e-12));
    CHECK(action::force_residual(spec, loop) ==
          action::reference::force_residual(spec, loop));
    CHECK(action::window_shift_value(spec, loop, 1) ==
          Catch::Approx(action::reference::window_shift_value(spec, loop, 1))
              .epsilon(1e-12));

    // gradient entries are assembled per sample and match bit for bit
    const auto g = action::classical_action_gradient(spec, loop);
    const auto gr = action::reference::classical_action_gradient(spec, loop);
    const auto sg = action::symplectic_action_gradient(spec, loop);
    const auto sgr = action::reference::symplectic_action_gradient(spec, loop);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(bits_equal(g[i].x, gr[i].x));
        CHECK(bits_equal(g[i].y, gr[i].y));
        CHECK(bits_equal(sg.dq[i].x, sgr.dq[i].x));
        CHECK(bits_equal(sg.dp[i].y, sgr.dp[i].y));
    }
}

TEST_CASE("results are identical at any thread cap") {
    const ProblemSpec spec = merry_2pi();
    const DiscreteLoop loop = random_phase_loop(512, 7005);
    set_thread_cap(1);
    const double v1 = action::classical_action(spec, loop);
    const double s1 = action::symplectic_action(spec, loop);
    const auto g1 = action::classical_action_gradient(spec, loop);
    set_thread_cap(4);
    const double v4 = action::classical_action(spec, loop);
    const double s4 = action::symplectic_action(spec, loop);
    const auto g4 = action::classical_action_gradient(spec, loop);
    set_thread_cap(0);
    CHECK(bits_equal(v1, v4));
    CHECK(bits_equal(s1, s4));
    for (std::size_t i = 0; i < g1.size(); ++i) {
        CHECK(bits_equal(g1[i].x, g4[i].x));
        CHECK(bits_equal(g1[i].y, g4[i].y));
    }
}
