// Problem data: time-dependent planar vector potentials A_t, periodic scalar
// potentials phi_t, and the composite spec consumed by every other module.
// Families are closed under the transforms in this toolkit: eliminating a
// polynomial scalar produces a gradient-drift vector potential, so values,
// curls and time derivatives stay closed-form everywhere.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rotorsym/fourier.hpp"
#include "rotorsym/vec.hpp"

namespace rotorsym::domain {

struct Box {
    Vec2 lo{-2.0, -2.0};
    Vec2 hi{2.0, 2.0};
};

class UnsupportedFamilyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Time-dependent planar vector potential. Implementations provide closed
// forms; the finite-difference cross-checks live in the tests only.
class VectorPotential {
  public:
    virtual ~VectorPotential() = default;
    virtual Vec2 value(double t, Vec2 q) const = 0;
    virtual Vec2 time_derivative(double t, Vec2 q) const = 0;
    // rot A_t(q) = d1 A^2 - d2 A^1
    virtual double rot(double t, Vec2 q) const = 0;
    // jac.m[k][j] = d A^k / d q_j
    virtual Mat2 space_jacobian(double t, Vec2 q) const = 0;
    virtual bool is_zero() const { return false; }
};

using VectorPotentialPtr = std::shared_ptr<const VectorPotential>;

// c(t) = constant + integral_0^t rate(s) ds; the coefficient class for drift
// families. A constant rate contributes a plain linear-in-t term.
struct DriftCoefficient {
    double constant = 0.0;
    FourierProfile rate;

    double value(double t) const {
        return constant + profile_antiderivative(rate, t);
    }
    double derivative(double t) const { return profile_eval(rate, t); }
};

// A_t(q) = omega(t) J0 q
VectorPotentialPtr make_rotational(const FourierProfile& omega);
// A_t(q) = c(t) q
VectorPotentialPtr make_radial_drift(const DriftCoefficient& c);
// A_t(q) = sum_m c_m(t) grad(q1^i q2^j); curl-free by construction.
struct GradientTerm {
    int i = 0;
    int j = 0;
    DriftCoefficient c;
};
VectorPotentialPtr make_gradient_drift(std::vector<GradientTerm> terms);
// A_t(q) = poly(t) * direction with poly a plain polynomial (coeffs[k] t^k);
// the family for deliberately non-twisted examples.
VectorPotentialPtr make_uniform(Vec2 direction, std::vector<double> poly_coeffs);
VectorPotentialPtr make_potential_sum(std::vector<VectorPotentialPtr> parts);
VectorPotentialPtr make_zero_potential();

// Periodic scalar potential phi_t.
class ScalarPotential {
  public:
    virtual ~ScalarPotential() = default;
    virtual double value(double t, Vec2 q) const = 0;
    virtual Vec2 gradient(double t, Vec2 q) const = 0;
    // integral_0^t grad phi_s ds, packaged as a (curl-free) vector potential.
    // Throws UnsupportedFamilyError when the family has no closed form.
    virtual VectorPotentialPtr gradient_time_antiderivative() const = 0;
    virtual bool is_zero() const { return false; }
};

using ScalarPotentialPtr = std::shared_ptr<const ScalarPotential>;

// phi_t(q) = sum_m coeff_m(t) q1^i q2^j
struct Monomial {
    int i = 0;
    int j = 0;
    FourierProfile coeff;
};
ScalarPotentialPtr make_polynomial_scalar(std::vector<Monomial> terms);
// phi_t(q) = -1/2 kappa(t) |q|^2
ScalarPotentialPtr make_quadratic_isotropic(const FourierProfile& kappa);
ScalarPotentialPtr make_zero_scalar();

struct ProblemSpec {
    VectorPotentialPtr potential;   // never null; zero potential allowed
    ScalarPotentialPtr scalar;      // never null; zero scalar allowed
    std::optional<Box> domain_hint;
};

// Point of extended phase space. All components must stay finite; the
// integrator reports divergence otherwise.
struct PhaseState {
    double t = 0.0;
    Vec2 q;
    Vec2 p;

    Vec4 z() const { return Vec4(q, p); }
};

// Uniform-grid 1-periodic loop, t_i = i/n, indices modulo n; sample n is
// sample 0 and is never stored. Configuration loops carry q only.
struct DiscreteLoop {
    std::vector<Vec2> q;
    std::vector<Vec2> p;   // empty for configuration loops

    int n() const { return static_cast<int>(q.size()); }
    bool is_phase() const { return !p.empty(); }
};

DiscreteLoop make_configuration_loop(std::vector<Vec2> q);
DiscreteLoop make_phase_loop(std::vector<Vec2> q, std::vector<Vec2> p);

// Time-dependent 1-form on phase space, alpha the dq-coefficients and beta
// the dp-coefficients, with closed-form time derivatives. coeff_jacobian,
// when present, gives the space Jacobian of the stacked covector
// c = (alpha, beta): m[j][k] = d c_k / d z_j with z = (q1, q2, p1, p2).
struct PhaseOneForm {
    std::function<Vec2(double, Vec2, Vec2)> alpha;
    std::function<Vec2(double, Vec2, Vec2)> beta;
    std::function<Vec2(double, Vec2, Vec2)> alpha_dot;
    std::function<Vec2(double, Vec2, Vec2)> beta_dot;
    std::function<Mat4(double, Vec2, Vec2)> coeff_jacobian;   // optional
};

} // namespace rotorsym::domain
