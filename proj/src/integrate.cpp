#include "rotorsym/integrate.hpp"

#include <cmath>
#include <random>

#include "rotorsym/fields.hpp"

namespace rotorsym::integrate {

const char* picture_name(Picture p) {
    switch (p) {
        case Picture::Canonical: return "canonical";
        case Picture::Twisted: return "twisted";
        case Picture::Force: return "force";
        case Picture::EulerFlow: return "euler-flow";
    }
    return "?";
}

Vec4 picture_rhs(const ProblemSpec& spec, Picture picture, double t, const Vec4& z) {
    switch (picture) {
        case Picture::Canonical:
            return fields::canonical_rhs(spec, t, z);
        case Picture::Twisted:
            // the Euler-Hamilton field X + Y
            return fields::hamiltonian_vf_x(spec, t, z) + fields::euler_vf_y(spec, t, z);
        case Picture::Force: {
            const Vec2 qdot = z.p();
            return Vec4(qdot, fields::force_rhs(spec, t, z.q(), qdot));
        }
        case Picture::EulerFlow:
            return fields::euler_vf_y(spec, t, z);
    }
    return {};
}

namespace {

bool finite(const Vec4& z) {
    for (int i = 0; i < 4; ++i)
        if (!std::isfinite(z[i])) return false;
    return true;
}

} // namespace

Trajectory integrate(const ProblemSpec& spec, Picture picture, const Vec4& z0, double t0,
                     double t1, int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (!(t1 > t0)) throw std::invalid_argument("need t1 > t0");

    Trajectory traj;
    traj.picture = picture;
    traj.t0 = t0;
    traj.dt = (t1 - t0) / n_steps;
    traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.states.push_back(z0);

    Vec4 z = z0;
    const double h = traj.dt;
    for (int i = 0; i < n_steps; ++i) {
        const double t = t0 + h * i;
        const Vec4 k1 = picture_rhs(spec, picture, t, z);
        const Vec4 k2 = picture_rhs(spec, picture, t + 0.5 * h, z + 0.5 * h * k1);
        const Vec4 k3 = picture_rhs(spec, picture, t + 0.5 * h, z + 0.5 * h * k2);
        const Vec4 k4 = picture_rhs(spec, picture, t + h, z + h * k3);
        z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!finite(z))
            throw DivergenceError(i, "integration diverged at step " + std::to_string(i) +
                                         " (t = " + std::to_string(t + h) + ")");
        traj.states.push_back(z);
    }
    return traj;
}

Vec4 time_one_map(const ProblemSpec& spec, Picture picture, const Vec4& z0, int n_steps) {
    Vec4 z = z0;
    const double h = 1.0 / n_steps;
    for (int i = 0; i < n_steps; ++i) {
        const double t = h * i;
        const Vec4 k1 = picture_rhs(spec, picture, t, z);
        const Vec4 k2 = picture_rhs(spec, picture, t + 0.5 * h, z + 0.5 * h * k1);
        const Vec4 k3 = picture_rhs(spec, picture, t + 0.5 * h, z + 0.5 * h * k2);
        const Vec4 k4 = picture_rhs(spec, picture, t + h, z + h * k3);
        z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!finite(z))
            throw DivergenceError(i, "integration diverged at step " + std::to_string(i));
    }
    return z;
}

namespace {

// RHS Jacobian by central differences, column j = d f / d z_j.
Mat4 rhs_jacobian(const ProblemSpec& spec, Picture picture, double t, const Vec4& z) {
    const double h = 1e-6 * (1.0 + norm(z));
    Mat4 jac;
    for (int j = 0; j < 4; ++j) {
        Vec4 zp = z, zm = z;
        zp[j] += h;
        zm[j] -= h;
        const Vec4 fp = picture_rhs(spec, picture, t, zp);
        const Vec4 fm = picture_rhs(spec, picture, t, zm);
        for (int i = 0; i < 4; ++i) jac.m[i][j] = (fp[i] - fm[i]) / (2.0 * h);
    }
    return jac;
}

struct Aug {
    Vec4 z;
    Mat4 u;
};

Aug aug_axpy(const Aug& a, double s, const Aug& b) {
    Aug r;
    r.z = a.z + s * b.z;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.u.m[i][j] = a.u.m[i][j] + s * b.u.m[i][j];
    return r;
}

} // namespace

Mat4 flow_jacobian(const ProblemSpec& spec, Picture picture, const Vec4& z0, double t1,
                   int n_steps) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (t1 == 0.0) return Mat4::identity();

    auto rhs = [&](double t, const Aug& a) {
        Aug r;
        r.z = picture_rhs(spec, picture, t, a.z);
        r.u = rhs_jacobian(spec, picture, t, a.z).multiply(a.u);
        return r;
    };

    Aug a{z0, Mat4::identity()};
    const double h = t1 / n_steps;
    for (int i = 0; i < n_steps; ++i) {
        const double t = h * i;
        const Aug k1 = rhs(t, a);
        const Aug k2 = rhs(t + 0.5 * h, aug_axpy(a, 0.5 * h, k1));
        const Aug k3 = rhs(t + 0.5 * h, aug_axpy(a, 0.5 * h, k2));
        const Aug k4 = rhs(t + h, aug_axpy(a, h, k3));
        Aug sum = aug_axpy(k1, 2.0, k2);
        sum = aug_axpy(sum, 2.0, k3);
        sum = aug_axpy(sum, 1.0, k4);
        a = aug_axpy(a, h / 6.0, sum);
        if (!finite(a.z))
            throw DivergenceError(i, "integration diverged at step " + std::to_string(i));
    }
    return a.u;
}

double euler_flow_symplecticity_defect(const ProblemSpec& spec, double t, const Vec4& z0,
                                       int n_steps, int probe_count) {
    if (t == 0.0) return 0.0;
    const Mat4 d = flow_jacobian(spec, Picture::EulerFlow, z0, t, n_steps);
    const Trajectory traj = integrate(spec, Picture::EulerFlow, z0, 0.0, t, n_steps);
    const Vec4 zt = traj.states.back();

    const Mat4 pullback =
        d.transpose().multiply(fields::omega_matrix(fields::rot_a(spec, t, zt.q())).multiply(d));
    const Mat4 initial = fields::omega_matrix(fields::rot_a(spec, 0.0, z0.q()));
    double defect = norm_inf(pullback - initial);

    std::mt19937 rng(0x10af5u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 0; k < probe_count; ++k) {
        Vec4 xi, eta;
        for (int i = 0; i < 4; ++i) {
            xi[i] = unit(rng);
            eta[i] = unit(rng);
        }
        const double lhs = dot(xi, pullback.apply(eta));
        const double rhs = dot(xi, initial.apply(eta));
        defect = std::max(defect, std::abs(lhs - rhs));
    }
    return defect;
}

} // namespace rotorsym::integrate
