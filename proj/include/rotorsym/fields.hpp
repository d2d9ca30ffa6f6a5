// Pointwise evaluation of the dynamical data: force right-hand side,
// canonical Hamilton equations, the Hamiltonian vector field X and the
// vertical Euler vector field Y against the twisted symplectic form,
// twist-defect reports, and line-integral recovery of the twist witness.
//
// Conventions (phase order q1, q2, p1, p2, B = rot A_t(q)):
//   omega_t matrix  Omega = [[B*J0bar, -I], [I, 0]],
//   omega_t(xi,eta) = xi^T Omega eta,  closed-form inverse
//   Omega^-1 = [[0, I], [-I, B*J0bar]].
#pragma once

#include <vector>

#include "rotorsym/problem.hpp"

namespace rotorsym::fields {

using domain::PhaseOneForm;
using domain::ProblemSpec;

double rot_a(const ProblemSpec& spec, double t, Vec2 q);
Vec2 a_dot(const ProblemSpec& spec, double t, Vec2 q);
Vec2 grad_phi(const ProblemSpec& spec, double t, Vec2 q);

// q-ddot = -(rot A_t) J0 qdot - A_t-dot - grad phi_t
Vec2 force_rhs(const ProblemSpec& spec, double t, Vec2 q, Vec2 qdot);

// H(q, p) = 1/2 |p - A_t(q)|^2 + phi_t(q)
double canonical_hamiltonian(const ProblemSpec& spec, double t, Vec2 q, Vec2 p);
// (q-dot, p-dot) = (p - A_t(q), sum_j (p_j - A^j) grad A^j - grad phi_t)
Vec4 canonical_rhs(const ProblemSpec& spec, double t, const Vec4& z);

// X with dH_t = omega_t(., X): (p1, p2, B p2 - d1 phi, -B p1 - d2 phi)
Vec4 hamiltonian_vf_x(const ProblemSpec& spec, double t, const Vec4& z);
// Y with lambda_t-dot = omega_t(., Y): vertical, (0, 0, -A-dot)
Vec4 euler_vf_y(const ProblemSpec& spec, double t, const Vec4& z);
// Solves c = omega_t(., V) for V via the closed-form inverse:
// V = (c3, c4, -c1 + B c4, -c2 - B c3)
Vec4 general_euler_vf(double rot, const Vec4& covector);

Mat4 omega_matrix(double rot);
// dH_t covector of the kinetic-plus-potential Hamiltonian 1/2|p|^2 + phi_t
Vec4 dh_covector(const ProblemSpec& spec, double t, const Vec4& z);
// time derivative of lambda_t = (p + A_t(q)) dq as a covector: (A-dot, 0)
Vec4 lambda_dot_covector(const ProblemSpec& spec, double t, const Vec4& z);
// lambda_t itself as a PhaseOneForm with closed-form coefficient Jacobian
PhaseOneForm lambda_form(const ProblemSpec& spec);

// Exterior derivative of a 1-form as the antisymmetric matrix
// M[j][k] = d_j c_k - d_k c_j; uses the form's closed-form coefficient
// Jacobian when present, central differences (step h*(1+|z|)) otherwise.
Mat4 d_lambda_matrix(const PhaseOneForm& form, double t, const Vec4& z, double fd_h = 1e-6);

struct TwistDefectReport {
    double max_adot_defect = 0.0;
    double max_rot_defect = 0.0;
    double max_curl_of_difference = 0.0;
};

// Defects of the three period-shift conditions on A over a sample grid.
// The third condition (A_{t+1} - A_t exact) is measured as the central-
// difference curl of the difference field; the step 1e-3*(1+|q|) keeps the
// quotient's rounding floor well under the 1e-10 scale of interest, and the
// truncation term vanishes for fields affine in q.
TwistDefectReport twist_defect(const ProblemSpec& spec, const std::vector<double>& t_samples,
                               const std::vector<Vec2>& q_samples);

// Twist witness f_t with (theta_{t+1} - theta_t) = df_t, reconstructed as a
// composite-Simpson line integral along the straight segment from x0 to x,
// normalized by f_t(x0) = 0.
double recover_f(const domain::VectorPotential& a, double t, Vec2 x, Vec2 x0,
                 int n_steps = 256);
double recover_f(const PhaseOneForm& form, double t, const Vec4& x, const Vec4& x0,
                 int n_steps = 256);

} // namespace rotorsym::fields
