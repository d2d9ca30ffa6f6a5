// Periodic-orbit detection: damped Newton shooting on the time-1 flow map
// (least-squares steps, so continua of fixed points are handled), and
// Gauss-Newton/Levenberg root-finding on the discrete action gradients.
// Every result carries recomputable residual certificates.
#pragma once

#include <string>

#include "rotorsym/action.hpp"
#include "rotorsym/integrate.hpp"
#include "rotorsym/problem.hpp"

namespace rotorsym::orbits {

using domain::DiscreteLoop;
using domain::ProblemSpec;
using integrate::Picture;

enum class Method { Shooting, Variational };
enum class Functional { Classical, Symplectic };

struct OrbitResult {
    Method method = Method::Shooting;
    Picture picture = Picture::Canonical;
    // For variational results this is the functional that was minimized;
    // shooting results certify against the classical gradient.
    Functional functional = Functional::Classical;
    DiscreteLoop loop;             // 256 samples for shooting results
    Vec4 z_star;                   // fixed point / seeded initial state
    double fixed_point_defect = 0.0;   // ||time_one_map(z*) - z*||_inf
    double force_defect = 0.0;         // force_residual of the q samples
    double gradient_defect = 0.0;      // sup norm of the certified gradient
    int iterations = 0;
    bool converged = false;
};

// Damped Newton on F(z) = time_one_map(z) - z. The step solves
// (DPhi - I) delta = -F in the least-squares sense through an SVD
// pseudo-inverse with singular values below 1e-8 * sigma_max dropped:
// resonant specs have whole planes of fixed points and the step then
// converges onto the family instead of failing on the singular matrix.
// Non-convergence is reported in the result, not thrown; integration
// divergence propagates as integrate::DivergenceError.
OrbitResult find_orbit_shooting(const ProblemSpec& spec, Picture picture,
                                const Vec4& z_guess, double tol = 1e-9,
                                int max_iter = 25);

// Gauss-Newton with Levenberg damping on G = action gradient, minimizing
// |G|^2 (critical points are saddles in general, so the action itself is
// not a usable merit function). Jacobian by forward differences column by
// column; damping starts at 1e-3, halves on success, grows tenfold on
// rejection. Converged when ||G||_inf < tol. The classical functional
// requires a configuration loop, the symplectic one a phase loop.
OrbitResult find_orbit_variational(const ProblemSpec& spec, Functional functional,
                                   const DiscreteLoop& loop_guess, double tol = 1e-8,
                                   int max_iter = 50);

// Shooting from seed_count starts: seed 0 is the unperturbed guess, later
// seeds perturb each component by a fixed-seed uniform draw in [-0.1, 0.1].
// Starts run in a fixed order and the best result wins (converged first,
// then smallest fixed-point defect); a start that diverges is skipped
// unless every start diverges.
OrbitResult find_orbit_multistart(const ProblemSpec& spec, Picture picture,
                                  const Vec4& z_guess, double tol, int max_iter,
                                  int seed_count);

// Initial state for the given picture sampled from a loop at t = 0. Stored
// p samples are read as twisted momenta (the symplectic functional's
// convention); configuration loops reconstruct the velocity with the
// fourth-order central stencil. Canonical momenta add A_0(q_0).
Vec4 seed_state_from_loop(const ProblemSpec& spec, const DiscreteLoop& loop,
                          Picture picture);

// Recomputes every defect of a result from scratch and returns the largest
// absolute deviation from the stored values; 0 for a sound certificate.
double certificate_discrepancy(const ProblemSpec& spec, const OrbitResult& r);

// {method, picture, converged, iterations, defects{...}, loop_file}
std::string orbit_result_json(const OrbitResult& r, const std::string& loop_file);

} // namespace rotorsym::orbits
