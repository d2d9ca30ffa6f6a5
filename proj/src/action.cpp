#include "rotorsym/action.hpp"

#include <cstddef>
#include <stdexcept>

#include "rotorsym/fields.hpp"
#include "rotorsym/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rotorsym::action {

namespace {

void check_loop(const DiscreteLoop& loop, bool need_phase) {
    if (loop.n() < 8) {
        throw std::invalid_argument("loop too short: need at least 8 samples");
    }
    if (need_phase && !loop.is_phase()) {
        throw std::invalid_argument("phase loop required: missing p samples");
    }
    if (loop.is_phase() && loop.p.size() != loop.q.size()) {
        throw std::invalid_argument("phase loop sample counts differ");
    }
}

// Fixed-order pairwise reduction; the order depends only on the length,
// never on the thread count, so parallel fills stay bit-reproducible.
double pairwise_sum(const double* v, std::size_t len) {
    if (len <= 8) {
        double acc = 0.0;
        for (std::size_t i = 0; i < len; ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = len / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, len - half);
}

double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(v.data(), v.size());
}

// Per-panel geometry shared by every functional.
struct Panel {
    double tbar;
    Vec2 qbar;
    Vec2 dq;
};

inline Panel panel_at(const DiscreteLoop& loop, int i) {
    const int n = loop.n();
    const Vec2& a = loop.q[static_cast<std::size_t>(i)];
    const Vec2& b = loop.q[static_cast<std::size_t>((i + 1) % n)];
    return Panel{(i + 0.5) / n, 0.5 * (a + b), b - a};
}

inline Vec2 pbar_at(const DiscreteLoop& loop, int i) {
    const int n = loop.n();
    return 0.5 * (loop.p[static_cast<std::size_t>(i)] +
                  loop.p[static_cast<std::size_t>((i + 1) % n)]);
}

double classical_panel(const ProblemSpec& spec, const DiscreteLoop& loop, int i) {
    const Panel pn = panel_at(loop, i);
    const int n = loop.n();
    const Vec2 a = spec.potential->value(pn.tbar, pn.qbar);
    return 0.5 * n * dot(pn.dq, pn.dq) + dot(a, pn.dq) -
           spec.scalar->value(pn.tbar, pn.qbar) / n;
}

double symplectic_panel(const ProblemSpec& spec, const DiscreteLoop& loop, int i) {
    const Panel pn = panel_at(loop, i);
    const int n = loop.n();
    const Vec2 pb = pbar_at(loop, i);
    const Vec2 a = spec.potential->value(pn.tbar, pn.qbar);
    return dot(pb + a, pn.dq) -
           (0.5 * dot(pb, pb) + spec.scalar->value(pn.tbar, pn.qbar)) / n;
}

// Panel i touches samples i (as left endpoint) and i+1 (as right endpoint).
// gq_left is d(panel)/dq_i, gq_right is d(panel)/dq_{i+1}; likewise for p.
struct ClassicalPanelGrad {
    Vec2 left;
    Vec2 right;
};

ClassicalPanelGrad classical_panel_grad(const ProblemSpec& spec,
                                        const DiscreteLoop& loop, int i) {
    const Panel pn = panel_at(loop, i);
    const int n = loop.n();
    const Vec2 a = spec.potential->value(pn.tbar, pn.qbar);
    const Mat2 jac = spec.potential->space_jacobian(pn.tbar, pn.qbar);
    const Vec2 gphi = spec.scalar->gradient(pn.tbar, pn.qbar);
    const Vec2 common =
        0.5 * jac.apply_transpose(pn.dq) + (-0.5 / n) * gphi;
    const Vec2 kin = static_cast<double>(n) * pn.dq;
    return ClassicalPanelGrad{common - kin - a, common + kin + a};
}

struct SymplecticPanelGrad {
    Vec2 q_left;
    Vec2 q_right;
    Vec2 p_both;   // d(panel)/dp_i == d(panel)/dp_{i+1}
};

SymplecticPanelGrad symplectic_panel_grad(const ProblemSpec& spec,
                                          const DiscreteLoop& loop, int i) {
    const Panel pn = panel_at(loop, i);
    const int n = loop.n();
    const Vec2 pb = pbar_at(loop, i);
    const Vec2 a = spec.potential->value(pn.tbar, pn.qbar);
    const Mat2 jac = spec.potential->space_jacobian(pn.tbar, pn.qbar);
    const Vec2 gphi = spec.scalar->gradient(pn.tbar, pn.qbar);
    const Vec2 common =
        0.5 * jac.apply_transpose(pn.dq) + (-0.5 / n) * gphi;
    const Vec2 circ = pb + a;
    return SymplecticPanelGrad{common - circ, common + circ,
                               0.5 * pn.dq + (-0.5 / n) * pb};
}

double window_panel(const domain::VectorPotential& theta,
                    const DiscreteLoop& loop, int i, int k) {
    const Panel pn = panel_at(loop, i);
    return dot(theta.value(pn.tbar + k, pn.qbar), pn.dq);
}

double force_panel(const ProblemSpec& spec, const DiscreteLoop& loop, int i) {
    const int n = loop.n();
    const Vec2& prev = loop.q[static_cast<std::size_t>((i + n - 1) % n)];
    const Vec2& here = loop.q[static_cast<std::size_t>(i)];
    const Vec2& next = loop.q[static_cast<std::size_t>((i + 1) % n)];
    const double t = static_cast<double>(i) / n;
    const Vec2 acc =
        (static_cast<double>(n) * n) * (next - 2.0 * here + prev);
    const Vec2 vel = (0.5 * n) * (next - prev);
    return norm_inf(acc - fields::force_rhs(spec, t, here, vel));
}

} // namespace

double classical_action(const ProblemSpec& spec, const DiscreteLoop& loop) {
    check_loop(loop, false);
    const int n = loop.n();
    std::vector<double> panel(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(thread_cap()) \
    if (parallel_enabled())
    for (int i = 0; i < n; ++i) {
        panel[static_cast<std::size_t>(i)] = classical_panel(spec, loop, i);
    }
    return pairwise_sum(panel);
}

std::vector<Vec2> classical_action_gradient(const ProblemSpec& spec,
                                            const DiscreteLoop& loop) {
    check_loop(loop, false);
    const int n = loop.n();
    std::vector<Vec2> left(static_cast<std::size_t>(n));
    std::vector<Vec2> right(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(thread_cap()) \
    if (parallel_enabled())
    for (int i = 0; i < n; ++i) {
        const ClassicalPanelGrad g = classical_panel_grad(spec, loop, i);
        left[static_cast<std::size_t>(i)] = g.left;
        right[static_cast<std::size_t>(i)] = g.right;
    }
    std::vector<Vec2> grad(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        grad[static_cast<std::size_t>(j)] =
            left[static_cast<std::size_t>(j)] +
            right[static_cast<std::size_t>((j + n - 1) % n)];
    }
    return grad;
}

double symplectic_action(const ProblemSpec& spec, const DiscreteLoop& loop) {
    check_loop(loop, true);
    const int n = loop.n();
    std::vector<double> panel(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(thread_cap()) \
    if (parallel_enabled())
    for (int i = 0; i < n; ++i) {
        panel[static_cast<std::size_t>(i)] = symplectic_panel(spec, loop, i);
    }
    return pairwise_sum(panel);
}

PhaseGradient symplectic_action_gradient(const ProblemSpec& spec,
                                         const DiscreteLoop& loop) {
    check_loop(loop, true);
    const int n = loop.n();
    std::vector<Vec2> ql(static_cast<std::size_t>(n));
    std::vector<Vec2> qr(static_cast<std::size_t>(n));
    std::vector<Vec2> pb(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(thread_cap()) \
    if (parallel_enabled())
    for (int i = 0; i < n; ++i) {
        const SymplecticPanelGrad g = symplectic_panel_grad(spec, loop, i);
        ql[static_cast<std::size_t>(i)] = g.q_left;
        qr[static_cast<std::size_t>(i)] = g.q_right;
        pb[static_cast<std::size_t>(i)] = g.p_both;
    }
    PhaseGradient grad;
    grad.dq.resize(static_cast<std::size_t>(n));
    grad.dp.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const std::size_t prev = static_cast<std::size_t>((j + n - 1) % n);
        grad.dq[static_cast<std::size_t>(j)] =
            ql[static_cast<std::size_t>(j)] + qr[prev];
        grad.dp[static_cast<std::size_t>(j)] =
            pb[static_cast<std::size_t>(j)] + pb[prev];
    }
    return grad;
}

double window_shift_value(const domain::VectorPotential& theta,
                          const DiscreteLoop& loop, int k) {
    check_loop(loop, false);
    const int n = loop.n();
    std::vector<double> panel(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(thread_cap()) \
    if (parallel_enabled())
    for (int i = 0; i < n; ++i) {
        panel[static_cast<std::size_t>(i)] = window_panel(theta, loop, i, k);
    }
    return pairwise_sum(panel);
}

double window_shift_value(const ProblemSpec& spec, const DiscreteLoop& loop,
                          int k) {
    return window_shift_value(*spec.potential, loop, k);
}

double force_residual(const ProblemSpec& spec, const DiscreteLoop& loop) {
    check_loop(loop, false);
    const int n = loop.n();
    std::vector<double> res(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(thread_cap()) \
    if (parallel_enabled())
    for (int i = 0; i < n; ++i) {
        res[static_cast<std::size_t>(i)] = force_panel(spec, loop, i);
    }
    double sup = 0.0;
    for (double r : res) {
        if (r > sup) sup = r;
    }
    return sup;
}

namespace reference {

double classical_action(const ProblemSpec& spec, const DiscreteLoop& loop) {
    check_loop(loop, false);
    double acc = 0.0;
    for (int i = 0; i < loop.n(); ++i) acc += classical_panel(spec, loop, i);
    return acc;
}

std::vector<Vec2> classical_action_gradient(const ProblemSpec& spec,
                                            const DiscreteLoop& loop) {
    check_loop(loop, false);
    const int n = loop.n();
    std::vector<Vec2> grad(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const ClassicalPanelGrad own = classical_panel_grad(spec, loop, j);
        const ClassicalPanelGrad before =
            classical_panel_grad(spec, loop, (j + n - 1) % n);
        grad[static_cast<std::size_t>(j)] = own.left + before.right;
    }
    return grad;
}

double symplectic_action(const ProblemSpec& spec, const DiscreteLoop& loop) {
    check_loop(loop, true);
    double acc = 0.0;
    for (int i = 0; i < loop.n(); ++i) acc += symplectic_panel(spec, loop, i);
    return acc;
}

PhaseGradient symplectic_action_gradient(const ProblemSpec& spec,
                                         const DiscreteLoop& loop) {
    check_loop(loop, true);
    const int n = loop.n();
    PhaseGradient grad;
    grad.dq.resize(static_cast<std::size_t>(n));
    grad.dp.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const SymplecticPanelGrad own = symplectic_panel_grad(spec, loop, j);
        const SymplecticPanelGrad before =
            symplectic_panel_grad(spec, loop, (j + n - 1) % n);
        grad.dq[static_cast<std::size_t>(j)] = own.q_left + before.q_right;
        grad.dp[static_cast<std::size_t>(j)] = own.p_both + before.p_both;
    }
    return grad;
}

double window_shift_value(const domain::VectorPotential& theta,
                          const DiscreteLoop& loop, int k) {
    check_loop(loop, false);
    double acc = 0.0;
    for (int i = 0; i < loop.n(); ++i) acc += window_panel(theta, loop, i, k);
    return acc;
}

double window_shift_value(const ProblemSpec& spec, const DiscreteLoop& loop,
                          int k) {
    return window_shift_value(*spec.potential, loop, k);
}

double force_residual(const ProblemSpec& spec, const DiscreteLoop& loop) {
    check_loop(loop, false);
    double sup = 0.0;
    for (int i = 0; i < loop.n(); ++i) {
        const double r = force_panel(spec, loop, i);
        if (r > sup) sup = r;
    }
    return sup;
}

} // namespace reference

} // namespace rotorsym::action
