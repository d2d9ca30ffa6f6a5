// The two elimination transforms: absorbing the scalar potential into the
// vector potential (same trajectories, zero scalar), and absorbing the
// Hamiltonian into the primitive 1-form (same critical points, zero
// Hamiltonian), plus the rotating-frame preset constructor.
#pragma once

#include "rotorsym/problem.hpp"

namespace rotorsym::transforms {

// A -> A + integral_0^t grad phi_s ds, scalar -> 0. Closed-form time
// integrals only; throws UnsupportedFamilyError if the scalar family has no
// closed-form antiderivative.
domain::ProblemSpec eliminate_scalar(const domain::ProblemSpec& spec);

// lambda^H = lambda + integral_0^t dH_s ds for H_t = 1/2|p|^2 + phi_t:
// dq-coefficients p + A_t(q) + integral grad phi, dp-coefficients t*p, with
// closed-form time derivatives and coefficient Jacobian.
domain::PhaseOneForm eliminate_hamiltonian(const domain::ProblemSpec& spec);

// || Omega^-1(lambda^H-dot) - (Y + X) ||_inf at (t, z); zero in exact
// arithmetic because lambda^H-dot = lambda-dot + dH_t.
double verify_yh_identity(const domain::ProblemSpec& spec, double t, const Vec4& z);

// A_t(q) = omega(t) J0 q with phi_t(q) = -1/2 omega(t)^2 |q|^2; the square
// is expanded exactly into a FourierProfile.
domain::ProblemSpec make_merry_go_round(const domain::FourierProfile& omega);

} // namespace rotorsym::transforms
