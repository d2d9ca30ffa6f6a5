// Micro-benchmark for the action kernels: parallel implementation against
// the serial reference on the same large loop. Also cross-checks that the
// two agree, so a speedup never hides a numerical regression.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotorsym/action.hpp"
#include "rotorsym/fourier.hpp"
#include "rotorsym/problem.hpp"
#include "rotorsym/threads.hpp"
#include "rotorsym/transforms.hpp"
#include "rotorsym/vec.hpp"

namespace {

using rotorsym::Vec2;
using rotorsym::domain::DiscreteLoop;
using rotorsym::domain::ProblemSpec;

constexpr double kTau = 6.283185307179586476925286766559;

DiscreteLoop make_loop(int n) {
    std::vector<Vec2> q(static_cast<std::size_t>(n));
    std::vector<Vec2> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        // Smooth loop with a couple of harmonics so no term degenerates.
        q[static_cast<std::size_t>(i)] =
            Vec2{std::cos(kTau * t) + 0.2 * std::cos(2.0 * kTau * t),
                 -std::sin(kTau * t) + 0.1 * std::sin(3.0 * kTau * t)};
        p[static_cast<std::size_t>(i)] =
            Vec2{-kTau * std::sin(kTau * t), -kTau * std::cos(kTau * t)};
    }
    return rotorsym::domain::make_phase_loop(std::move(q), std::move(p));
}

template <typename F>
double best_of(int repeat, F&& body) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms,
            double diff) {
    std::printf("%-28s %12.3f %12.3f %9.2fx %11.2e\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms, diff);
}

} // namespace

int main(int argc, char** argv) {
    int n = 1 << 16;
    int repeat = 5;
    CLI::App app{"action kernel benchmark"};
    app.add_option("--n", n, "loop sample count")->check(CLI::Range(8, 1 << 24));
    app.add_option("--repeat", repeat, "timed repetitions, best-of")
        ->check(CLI::Range(1, 100));
    CLI11_PARSE(app, argc, argv);

    rotorsym::domain::FourierProfile omega;
    omega.c0 = kTau;
    omega.sin_coeffs = {1.0};
    const ProblemSpec spec = rotorsym::transforms::make_merry_go_round(omega);
    const DiscreteLoop loop = make_loop(n);

    std::printf("n = %d samples, best of %d runs, %d worker(s)\n\n", n, repeat,
                rotorsym::thread_cap());
    std::printf("%-28s %12s %12s %9s %11s\n", "kernel", "serial ms",
                "parallel ms", "speedup", "|diff|");

    namespace act = rotorsym::action;
    {
        double vs = 0.0;
        double vp = 0.0;
        const double ts = best_of(
            repeat, [&] { vs = act::reference::classical_action(spec, loop); });
        const double tp =
            best_of(repeat, [&] { vp = act::classical_action(spec, loop); });
        report("classical_action", ts, tp, std::abs(vs - vp));
    }
    {
        double vs = 0.0;
        double vp = 0.0;
        const double ts = best_of(
            repeat, [&] { vs = act::reference::symplectic_action(spec, loop); });
        const double tp =
            best_of(repeat, [&] { vp = act::symplectic_action(spec, loop); });
        report("symplectic_action", ts, tp, std::abs(vs - vp));
    }
    {
        std::vector<Vec2> gs;
        std::vector<Vec2> gp;
        const double ts = best_of(repeat, [&] {
            gs = act::reference::classical_action_gradient(spec, loop);
        });
        const double tp = best_of(
            repeat, [&] { gp = act::classical_action_gradient(spec, loop); });
        double diff = 0.0;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            diff = std::max(diff, rotorsym::norm_inf(gs[i] - gp[i]));
        }
        report("classical_action_gradient", ts, tp, diff);
    }
    {
        act::PhaseGradient gs;
        act::PhaseGradient gp;
        const double ts = best_of(repeat, [&] {
            gs = act::reference::symplectic_action_gradient(spec, loop);
        });
        const double tp = best_of(
            repeat, [&] { gp = act::symplectic_action_gradient(spec, loop); });
        double diff = 0.0;
        for (std::size_t i = 0; i < gs.dq.size(); ++i) {
            diff = std::max(diff, rotorsym::norm_inf(gs.dq[i] - gp.dq[i]));
            diff = std::max(diff, rotorsym::norm_inf(gs.dp[i] - gp.dp[i]));
        }
        report("symplectic_action_gradient", ts, tp, diff);
    }
    {
        double vs = 0.0;
        double vp = 0.0;
        const double ts = best_of(
            repeat, [&] { vs = act::reference::force_residual(spec, loop); });
        const double tp =
            best_of(repeat, [&] { vp = act::force_residual(spec, loop); });
        report("force_residual", ts, tp, std::abs(vs - vp));
    }
    return 0;
}
