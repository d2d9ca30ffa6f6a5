// Discrete action functionals over loops, midpoint rule on n panels.
// Panel i joins sample i to sample (i+1) mod n and is evaluated at the
// midpoint time (i + 1/2)/n. All kernels are deterministic for a fixed
// sample count: parallel runs fill per-panel buffers and reduce them with
// a fixed-order pairwise sum, so values are bit-identical across thread
// counts and match the serial reference:: implementations exactly for
// the sums' tolerance (see tests).
#pragma once

#include <vector>

#include "rotorsym/problem.hpp"

namespace rotorsym::action {

using domain::DiscreteLoop;
using domain::ProblemSpec;

// sum_i [ (n/2)|dq_i|^2 + A(tbar_i, qbar_i).dq_i - phi(tbar_i, qbar_i)/n ]
// Accepts phase loops too (the p samples are ignored).
double classical_action(const ProblemSpec& spec, const DiscreteLoop& loop);

// Exact partials of classical_action with respect to each q_j.
std::vector<Vec2> classical_action_gradient(const ProblemSpec& spec,
                                            const DiscreteLoop& loop);

// sum_i [ (pbar_i + A(tbar_i, qbar_i)).dq_i - (|pbar_i|^2/2 + phi(tbar_i, qbar_i))/n ]
// Requires a phase loop.
double symplectic_action(const ProblemSpec& spec, const DiscreteLoop& loop);

struct PhaseGradient {
    std::vector<Vec2> dq;
    std::vector<Vec2> dp;
};

// Exact partials of symplectic_action with respect to each (q_j, p_j).
PhaseGradient symplectic_action_gradient(const ProblemSpec& spec,
                                         const DiscreteLoop& loop);

// Coupling term sum_i A(tbar_i + k, qbar_i).dq_i: the loop's pairing with
// the 1-form over the window [k, k+1]. For twist-periodic potentials the
// value is independent of k up to roundoff; the telescoping identity
// sum_i qbar_i.dq_i = 0 cancels the secular part exactly.
double window_shift_value(const domain::VectorPotential& theta,
                          const DiscreteLoop& loop, int k);
double window_shift_value(const ProblemSpec& spec, const DiscreteLoop& loop,
                          int k);

// sup_i | n^2 (q_{i+1} - 2 q_i + q_{i-1}) - force_rhs(t_i, q_i, v_i) |
// with v_i = n (q_{i+1} - q_{i-1})/2 and t_i = i/n.
double force_residual(const ProblemSpec& spec, const DiscreteLoop& loop);

// Plain serial implementations, left-to-right accumulation with no panel
// buffers. Kept as the comparison oracle for the parallel kernels and as
// the baseline in the kernel benchmark.
namespace reference {

double classical_action(const ProblemSpec& spec, const DiscreteLoop& loop);
std::vector<Vec2> classical_action_gradient(const ProblemSpec& spec,
                                            const DiscreteLoop& loop);
double symplectic_action(const ProblemSpec& spec, const DiscreteLoop& loop);
PhaseGradient symplectic_action_gradient(const ProblemSpec& spec,
                                         const DiscreteLoop& loop);
double window_shift_value(const domain::VectorPotential& theta,
                          const DiscreteLoop& loop, int k);
double window_shift_value(const ProblemSpec& spec, const DiscreteLoop& loop,
                          int k);
double force_residual(const ProblemSpec& spec, const DiscreteLoop& loop);

} // namespace reference

} // namespace rotorsym::action
