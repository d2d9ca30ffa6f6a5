#include "rotorsym/transforms.hpp"

#include "rotorsym/fields.hpp"

namespace rotorsym::transforms {

using namespace domain;

ProblemSpec eliminate_scalar(const ProblemSpec& spec) {
    if (spec.scalar->is_zero()) return spec;
    ProblemSpec out;
    std::vector<VectorPotentialPtr> parts;
    if (!spec.potential->is_zero()) parts.push_back(spec.potential);
    parts.push_back(spec.scalar->gradient_time_antiderivative());
    out.potential = make_potential_sum(std::move(parts));
    out.scalar = make_zero_scalar();
    out.domain_hint = spec.domain_hint;
    return out;
}

PhaseOneForm eliminate_hamiltonian(const ProblemSpec& spec) {
    const auto pot = spec.potential;
    const auto scal = spec.scalar;
    // integral_0^t grad phi_s ds, as a curl-free vector potential
    const auto gint = scal->gradient_time_antiderivative();

    PhaseOneForm f;
    f.alpha = [pot, gint](double t, Vec2 q, Vec2 p) {
        return p + pot->value(t, q) + gint->value(t, q);
    };
    f.beta = [](double t, Vec2, Vec2 p) { return t * p; };
    f.alpha_dot = [pot, scal](double t, Vec2 q, Vec2) {
        return pot->time_derivative(t, q) + scal->gradient(t, q);
    };
    f.beta_dot = [](double, Vec2, Vec2 p) { return p; };
    f.coeff_jacobian = [pot, gint](double t, Vec2 q, Vec2) {
        const Mat2 da = pot->space_jacobian(t, q) + gint->space_jacobian(t, q);
        Mat4 jac;
        // m[j][k] = d c_k / d z_j; c = (p + A + integral grad phi, t*p)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) jac.m[j][k] = da.m[k][j];
        jac.m[2][0] = 1.0;
        jac.m[3][1] = 1.0;
        jac.m[2][2] = t;
        jac.m[3][3] = t;
        return jac;
    };
    return f;
}

double verify_yh_identity(const ProblemSpec& spec, double t, const Vec4& z) {
    const PhaseOneForm lh = eliminate_hamiltonian(spec);
    const Vec2 q = z.q(), p = z.p();
    const Vec4 lh_dot(lh.alpha_dot(t, q, p), lh.beta_dot(t, q, p));
    const Vec4 yh = fields::general_euler_vf(fields::rot_a(spec, t, q), lh_dot);
    const Vec4 xy = fields::euler_vf_y(spec, t, z) + fields::hamiltonian_vf_x(spec, t, z);
    return norm_inf(yh - xy);
}

ProblemSpec make_merry_go_round(const FourierProfile& omega) {
    ProblemSpec spec;
    spec.potential = make_rotational(omega);
    spec.scalar = make_quadratic_isotropic(profile_product(omega, omega));
    return spec;
}

} // namespace rotorsym::transforms
