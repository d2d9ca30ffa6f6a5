#include "rotorsym/fields.hpp"

#include <cmath>

namespace rotorsym::fields {

double rot_a(const ProblemSpec& spec, double t, Vec2 q) {
    return spec.potential->rot(t, q);
}

Vec2 a_dot(const ProblemSpec& spec, double t, Vec2 q) {
    return spec.potential->time_derivative(t, q);
}

Vec2 grad_phi(const ProblemSpec& spec, double t, Vec2 q) {
    return spec.scalar->gradient(t, q);
}

Vec2 force_rhs(const ProblemSpec& spec, double t, Vec2 q, Vec2 qdot) {
    return -(spec.potential->rot(t, q) * j0(qdot)) -
           spec.potential->time_derivative(t, q) - spec.scalar->gradient(t, q);
}

double canonical_hamiltonian(const ProblemSpec& spec, double t, Vec2 q, Vec2 p) {
    const Vec2 v = p - spec.potential->value(t, q);
    return 0.5 * dot(v, v) + spec.scalar->value(t, q);
}

Vec4 canonical_rhs(const ProblemSpec& spec, double t, const Vec4& z) {
    const Vec2 q = z.q(), p = z.p();
    const Vec2 v = p - spec.potential->value(t, q);
    // sum_j v_j grad A^j = (dA)^T v with (dA)[j][m] = d_m A^j
    const Vec2 pdot =
        spec.potential->space_jacobian(t, q).apply_transpose(v) - spec.scalar->gradient(t, q);
    return Vec4(v, pdot);
}

Vec4 hamiltonian_vf_x(const ProblemSpec& spec, double t, const Vec4& z) {
    const Vec2 q = z.q(), p = z.p();
    const double b = spec.potential->rot(t, q);
    const Vec2 gp = spec.scalar->gradient(t, q);
    return {p.x, p.y, b * p.y - gp.x, -b * p.x - gp.y};
}

Vec4 euler_vf_y(const ProblemSpec& spec, double t, const Vec4& z) {
    const Vec2 ad = spec.potential->time_derivative(t, z.q());
    return {0.0, 0.0, -ad.x, -ad.y};
}

Vec4 general_euler_vf(double rot, const Vec4& c) {
    return {c[2], c[3], -c[0] + rot * c[3], -c[1] - rot * c[2]};
}

Mat4 omega_matrix(double rot) {
    Mat4 w;
    w.m[0][1] = rot;
    w.m[1][0] = -rot;
    w.m[0][2] = -1.0;
    w.m[1][3] = -1.0;
    w.m[2][0] = 1.0;
    w.m[3][1] = 1.0;
    return w;
}

Vec4 dh_covector(const ProblemSpec& spec, double t, const Vec4& z) {
    const Vec2 gp = spec.scalar->gradient(t, z.q());
    return Vec4(gp, z.p());
}

Vec4 lambda_dot_covector(const ProblemSpec& spec, double t, const Vec4& z) {
    return Vec4(spec.potential->time_derivative(t, z.q()), Vec2{});
}

PhaseOneForm lambda_form(const ProblemSpec& spec) {
    const auto pot = spec.potential;
    PhaseOneForm f;
    f.alpha = [pot](double t, Vec2 q, Vec2 p) { return p + pot->value(t, q); };
    f.beta = [](double, Vec2, Vec2) { return Vec2{}; };
    f.alpha_dot = [pot](double t, Vec2 q, Vec2) { return pot->time_derivative(t, q); };
    f.beta_dot = [](double, Vec2, Vec2) { return Vec2{}; };
    f.coeff_jacobian = [pot](double t, Vec2 q, Vec2) {
        const Mat2 da = pot->space_jacobian(t, q);
        Mat4 jac;
        // m[j][k] = d c_k / d z_j; c = (p + A(q), 0)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) jac.m[j][k] = da.m[k][j];
        jac.m[2][0] = 1.0;
        jac.m[3][1] = 1.0;
        return jac;
    };
    return f;
}

namespace {

Vec4 form_covector(const PhaseOneForm& form, double t, const Vec4& z) {
    const Vec2 q = z.q(), p = z.p();
    return Vec4(form.alpha(t, q, p), form.beta(t, q, p));
}

} // namespace

Mat4 d_lambda_matrix(const PhaseOneForm& form, double t, const Vec4& z, double fd_h) {
    Mat4 jac;
    if (form.coeff_jacobian) {
        jac = form.coeff_jacobian(t, z.q(), z.p());
    } else {
        const double h = fd_h * (1.0 + norm(z));
        for (int j = 0; j < 4; ++j) {
            Vec4 zp = z, zm = z;
            zp[j] += h;
            zm[j] -= h;
            const Vec4 cp = form_covector(form, t, zp);
            const Vec4 cm = form_covector(form, t, zm);
            for (int k = 0; k < 4; ++k) jac.m[j][k] = (cp[k] - cm[k]) / (2.0 * h);
        }
    }
    return jac - jac.transpose();
}

TwistDefectReport twist_defect(const ProblemSpec& spec, const std::vector<double>& t_samples,
                               const std::vector<Vec2>& q_samples) {
    const auto& a = *spec.potential;
    TwistDefectReport r;
    for (double t : t_samples) {
        for (Vec2 q : q_samples) {
            r.max_adot_defect =
                std::max(r.max_adot_defect,
                         norm_inf(a.time_derivative(t + 1.0, q) - a.time_derivative(t, q)));
            r.max_rot_defect =
                std::max(r.max_rot_defect, std::abs(a.rot(t + 1.0, q) - a.rot(t, q)));

            const double h = 1e-3 * (1.0 + norm(q));
            auto diff = [&](Vec2 x) { return a.value(t + 1.0, x) - a.value(t, x); };
            const double curl = (diff({q.x + h, q.y}).y - diff({q.x - h, q.y}).y -
                                 (diff({q.x, q.y + h}).x - diff({q.x, q.y - h}).x)) /
                                (2.0 * h);
            r.max_curl_of_difference = std::max(r.max_curl_of_difference, std::abs(curl));
        }
    }
    return r;
}

namespace {

// Composite Simpson of s -> f(s) over [0,1] with n panels.
template <typename F>
double simpson01(F&& f, int n) {
    if (n < 1) n = 1;
    const double h = 1.0 / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = i * h;
        s += f(a) + 4.0 * f(a + 0.5 * h) + f(a + h);
    }
    return s * h / 6.0;
}

} // namespace

double recover_f(const domain::VectorPotential& a, double t, Vec2 x, Vec2 x0, int n_steps) {
    const Vec2 d = x - x0;
    return simpson01(
        [&](double s) {
            const Vec2 g = x0 + s * d;
            return dot(a.value(t + 1.0, g) - a.value(t, g), d);
        },
        n_steps);
}

double recover_f(const PhaseOneForm& form, double t, const Vec4& x, const Vec4& x0,
                 int n_steps) {
    const Vec4 d = x - x0;
    return simpson01(
        [&](double s) {
            const Vec4 g = x0 + s * d;
            return dot(form_covector(form, t + 1.0, g) - form_covector(form, t, g), d);
        },
        n_steps);
}

} // namespace rotorsym::fields
