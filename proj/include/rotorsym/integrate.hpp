// Fixed-step RK4 integration of the four dynamical pictures, flow Jacobians
// via the variational equation, and the flow-symplecticity defect.
//
// Pictures and their states:
//   Canonical  z = (q, p):      q' = p - A_t(q),  p' = (dA)^T (p-A) - grad phi
//   Twisted    z = (q, p):      q' = p,  p' = -(rot A) J0 p - A-dot - grad phi
//   Force      z = (q, qdot):   first-order reduction of the second-order
//                               force equation
//   EulerFlow  z = (q, p):      z' = Y_t(z), the vertical Euler field
// Canonical and twisted momenta differ by A_t(q) along matched trajectories.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rotorsym/problem.hpp"

namespace rotorsym::integrate {

using domain::ProblemSpec;

enum class Picture { Canonical, Twisted, Force, EulerFlow };

const char* picture_name(Picture p);

class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(int step, const std::string& what)
        : std::runtime_error(what), step_index(step) {}
    int step_index;
};

struct Trajectory {
    Picture picture = Picture::Canonical;
    double t0 = 0.0;
    double dt = 0.0;
    // n_steps + 1 samples, initial state included; for Force the last two
    // components hold qdot
    std::vector<Vec4> states;

    double time_at(int i) const { return t0 + dt * i; }
};

Vec4 picture_rhs(const ProblemSpec& spec, Picture picture, double t, const Vec4& z);

// Classical RK4 with step (t1-t0)/n_steps; throws DivergenceError with the
// failing step index when a state stops being finite.
Trajectory integrate(const ProblemSpec& spec, Picture picture, const Vec4& z0, double t0,
                     double t1, int n_steps);

// Final state of the flow over [0, 1].
Vec4 time_one_map(const ProblemSpec& spec, Picture picture, const Vec4& z0,
                  int n_steps = 4096);

// Jacobian of the time-t1 flow map at z0 (from t0 = 0), by RK4 on the
// 4+16-dimensional variational system; RHS Jacobians by central differences
// with step 1e-6*(1+|z|).
Mat4 flow_jacobian(const ProblemSpec& spec, Picture picture, const Vec4& z0, double t1,
                   int n_steps);

// Symplecticity defect of the Euler flow over [0, t]: the time-t flow pulls
// the time-t form back to the initial form, so with D the flow Jacobian the
// defect is ||D^T Omega_t(flow(z0)) D - Omega_0(z0)||_inf, also probed on
// probe_count fixed random tangent pairs.
double euler_flow_symplecticity_defect(const ProblemSpec& spec, double t, const Vec4& z0,
                                       int n_steps = 4096, int probe_count = 8);

} // namespace rotorsym::integrate
