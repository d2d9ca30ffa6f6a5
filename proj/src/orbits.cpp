#include "rotorsym/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include <json.hpp>

#include "rotorsym/fields.hpp"
#include "rotorsym/io.hpp"

namespace rotorsym::orbits {

namespace {

constexpr int kFlowSteps = 4096;
constexpr int kLoopSamples = 256;

double sup_norm(const std::vector<Vec2>& g) {
    double s = 0.0;
    for (const Vec2& v : g) s = std::max(s, norm_inf(v));
    return s;
}

double gradient_defect_of(const ProblemSpec& spec, Functional functional,
                          const DiscreteLoop& loop) {
    if (functional == Functional::Symplectic && loop.is_phase()) {
        const action::PhaseGradient g = action::symplectic_action_gradient(spec, loop);
        return std::max(sup_norm(g.dq), sup_norm(g.dp));
    }
    return sup_norm(action::classical_action_gradient(spec, loop));
}

double fixed_point_defect_of(const ProblemSpec& spec, Picture picture, const Vec4& z) {
    return norm_inf(integrate::time_one_map(spec, picture, z, kFlowSteps) - z);
}

Vec4 shoot_f(const ProblemSpec& spec, Picture picture, const Vec4& z) {
    return integrate::time_one_map(spec, picture, z, kFlowSteps) - z;
}

void fill_shooting_certificates(const ProblemSpec& spec, OrbitResult& r) {
    const integrate::Trajectory traj =
        integrate::integrate(spec, r.picture, r.z_star, 0.0, 1.0, kFlowSteps);
    r.loop = io::loop_from_trajectory(traj, kLoopSamples, true);
    r.fixed_point_defect = fixed_point_defect_of(spec, r.picture, r.z_star);
    r.force_defect = action::force_residual(spec, r.loop);
    r.gradient_defect = gradient_defect_of(spec, r.functional, r.loop);
}

} // namespace

OrbitResult find_orbit_shooting(const ProblemSpec& spec, Picture picture,
                                const Vec4& z_guess, double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    Vec4 z = z_guess;
    Vec4 f = shoot_f(spec, picture, z);
    double fn = norm_inf(f);
    int it = 0;
    while (fn >= tol && it < max_iter) {
        const Mat4 dphi = integrate::flow_jacobian(spec, picture, z, 1.0, kFlowSteps);
        Eigen::Matrix4d m;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                m(r, c) = dphi.m[r][c] - (r == c ? 1.0 : 0.0);
            }
        }
        Eigen::JacobiSVD<Eigen::Matrix4d> svd(
            m, Eigen::ComputeFullU | Eigen::ComputeFullV);
        svd.setThreshold(1e-8);
        const Eigen::Vector4d rhs(-f[0], -f[1], -f[2], -f[3]);
        const Eigen::Vector4d step = svd.solve(rhs);
        const Vec4 delta(step(0), step(1), step(2), step(3));

        double scale = 1.0;
        bool improved = false;
        for (int half = 0; half < 8; ++half) {
            const Vec4 zt = z + scale * delta;
            const Vec4 ft = shoot_f(spec, picture, zt);
            const double fnt = norm_inf(ft);
            if (fnt < fn) {
                z = zt;
                f = ft;
                fn = fnt;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        ++it;
        if (!improved) break;   // stalled step, report the best point honestly
    }

    OrbitResult r;
    r.method = Method::Shooting;
    r.picture = picture;
    r.functional = Functional::Classical;
    r.z_star = z;
    r.iterations = it;
    r.converged = fn < tol;
    fill_shooting_certificates(spec, r);
    return r;
}

namespace {

struct FlatProblem {
    const ProblemSpec& spec;
    Functional functional;
    int n;

    int dim() const {
        return functional == Functional::Classical ? 2 * n : 4 * n;
    }

    Eigen::VectorXd flatten(const DiscreteLoop& loop) const {
        Eigen::VectorXd x(dim());
        for (int i = 0; i < n; ++i) {
            x(2 * i) = loop.q[static_cast<std::size_t>(i)].x;
            x(2 * i + 1) = loop.q[static_cast<std::size_t>(i)].y;
        }
        if (functional == Functional::Symplectic) {
            for (int i = 0; i < n; ++i) {
                x(2 * n + 2 * i) = loop.p[static_cast<std::size_t>(i)].x;
                x(2 * n + 2 * i + 1) = loop.p[static_cast<std::size_t>(i)].y;
            }
        }
        return x;
    }

    DiscreteLoop unflatten(const Eigen::VectorXd& x) const {
        DiscreteLoop loop;
        loop.q.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            loop.q[static_cast<std::size_t>(i)] = Vec2{x(2 * i), x(2 * i + 1)};
        }
        if (functional == Functional::Symplectic) {
            loop.p.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                loop.p[static_cast<std::size_t>(i)] =
                    Vec2{x(2 * n + 2 * i), x(2 * n + 2 * i + 1)};
            }
        }
        return loop;
    }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const {
        const DiscreteLoop loop = unflatten(x);
        Eigen::VectorXd g(dim());
        if (functional == Functional::Classical) {
            const std::vector<Vec2> grad = action::classical_action_gradient(spec, loop);
            for (int i = 0; i < n; ++i) {
                g(2 * i) = grad[static_cast<std::size_t>(i)].x;
                g(2 * i + 1) = grad[static_cast<std::size_t>(i)].y;
            }
        } else {
            const action::PhaseGradient grad =
                action::symplectic_action_gradient(spec, loop);
            for (int i = 0; i < n; ++i) {
                g(2 * i) = grad.dq[static_cast<std::size_t>(i)].x;
                g(2 * i + 1) = grad.dq[static_cast<std::size_t>(i)].y;
                g(2 * n + 2 * i) = grad.dp[static_cast<std::size_t>(i)].x;
                g(2 * n + 2 * i + 1) = grad.dp[static_cast<std::size_t>(i)].y;
            }
        }
        return g;
    }
};

} // namespace

OrbitResult find_orbit_variational(const ProblemSpec& spec, Functional functional,
                                   const DiscreteLoop& loop_guess, double tol,
                                   int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (functional == Functional::Symplectic && !loop_guess.is_phase()) {
        throw std::invalid_argument("symplectic functional needs a phase loop");
    }
    // The classical functional ignores momenta, so a phase-loop guess (for
    // example one written by the shooting finder) seeds it by its q samples.
    DiscreteLoop guess = loop_guess;
    if (functional == Functional::Classical) guess.p.clear();

    const FlatProblem fp{spec, functional, guess.n()};
    Eigen::VectorXd x = fp.flatten(guess);
    Eigen::VectorXd g = fp.gradient(x);
    double lambda = 1e-3;
    int it = 0;
    bool converged = g.lpNorm<Eigen::Infinity>() < tol;

    while (!converged && it < max_iter) {
        const int dim = fp.dim();
        Eigen::MatrixXd jac(dim, dim);
        for (int j = 0; j < dim; ++j) {
            const double h = 1e-7 * (1.0 + std::abs(x(j)));
            Eigen::VectorXd xj = x;
            xj(j) += h;
            jac.col(j) = (fp.gradient(xj) - g) / h;
        }
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtg = jac.transpose() * g;

        bool accepted = false;
        for (int attempt = 0; attempt < 12 && !accepted; ++attempt) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal().array() += lambda;
            const Eigen::VectorXd delta = damped.ldlt().solve(-jtg);
            const Eigen::VectorXd xt = x + delta;
            const Eigen::VectorXd gt = fp.gradient(xt);
            if (gt.squaredNorm() < g.squaredNorm()) {
                x = xt;
                g = gt;
                lambda = std::max(0.5 * lambda, 1e-14);
                accepted = true;
            } else {
                lambda *= 10.0;
                if (lambda > 1e12) break;
            }
        }
        ++it;
        if (!accepted) break;   // damping exhausted, report honestly
        converged = g.lpNorm<Eigen::Infinity>() < tol;
    }

    OrbitResult r;
    r.method = Method::Variational;
    r.functional = functional;
    r.picture = functional == Functional::Classical ? Picture::Canonical
                                                    : Picture::Twisted;
    r.loop = fp.unflatten(x);
    r.iterations = it;
    r.converged = converged;
    r.gradient_defect = gradient_defect_of(spec, functional, r.loop);
    r.force_defect = action::force_residual(spec, r.loop);
    r.z_star = seed_state_from_loop(spec, r.loop, r.picture);
    r.fixed_point_defect = fixed_point_defect_of(spec, r.picture, r.z_star);
    return r;
}

OrbitResult find_orbit_multistart(const ProblemSpec& spec, Picture picture,
                                  const Vec4& z_guess, double tol, int max_iter,
                                  int seed_count) {
    if (seed_count < 1) throw std::invalid_argument("seed count must be >= 1");
    bool have_result = false;
    OrbitResult best;
    bool have_error = false;
    integrate::DivergenceError last_error(0, "divergence");
    for (int seed = 0; seed < seed_count; ++seed) {
        Vec4 guess = z_guess;
        if (seed > 0) {
            std::mt19937 rng(0x5eed0000u + static_cast<unsigned>(seed));
            std::uniform_real_distribution<double> jitter(-0.1, 0.1);
            for (int k = 0; k < 4; ++k) guess[k] += jitter(rng);
        }
        try {
            OrbitResult r = find_orbit_shooting(spec, picture, guess, tol, max_iter);
            const bool better =
                !have_result ||
                (r.converged && !best.converged) ||
                (r.converged == best.converged &&
                 r.fixed_point_defect < best.fixed_point_defect);
            if (better) {
                best = std::move(r);
                have_result = true;
            }
        } catch (const integrate::DivergenceError& e) {
            last_error = e;
            have_error = true;
        }
    }
    if (!have_result) {
        if (have_error) throw last_error;
        throw std::invalid_argument("no starts attempted");
    }
    return best;
}

Vec4 seed_state_from_loop(const ProblemSpec& spec, const DiscreteLoop& loop,
                          Picture picture) {
    if (loop.n() < 8) {
        throw std::invalid_argument("loop too short: need at least 8 samples");
    }
    const int n = loop.n();
    const Vec2 q0 = loop.q[0];
    Vec2 qdot;
    if (loop.is_phase()) {
        qdot = loop.p[0];
    } else {
        // fourth-order central stencil at sample 0
        const Vec2& qm2 = loop.q[static_cast<std::size_t>(n - 2)];
        const Vec2& qm1 = loop.q[static_cast<std::size_t>(n - 1)];
        const Vec2& qp1 = loop.q[1];
        const Vec2& qp2 = loop.q[2];
        qdot = (n / 12.0) * (-1.0 * qp2 + 8.0 * qp1 - 8.0 * qm1 + 1.0 * qm2);
    }
    switch (picture) {
        case Picture::Canonical:
            return Vec4(q0, qdot + spec.potential->value(0.0, q0));
        case Picture::Twisted:
        case Picture::Force:
            return Vec4(q0, qdot);
        case Picture::EulerFlow:
            return Vec4(q0, qdot);
    }
    return Vec4(q0, qdot);
}

double certificate_discrepancy(const ProblemSpec& spec, const OrbitResult& r) {
    double worst = 0.0;
    if (r.method == Method::Shooting) {
        OrbitResult redo = r;
        fill_shooting_certificates(spec, redo);
        worst = std::max(worst, std::abs(redo.fixed_point_defect - r.fixed_point_defect));
        worst = std::max(worst, std::abs(redo.force_defect - r.force_defect));
        worst = std::max(worst, std::abs(redo.gradient_defect - r.gradient_defect));
        return worst;
    }
    const double grad = gradient_defect_of(spec, r.functional, r.loop);
    const double force = action::force_residual(spec, r.loop);
    const Vec4 seed = seed_state_from_loop(spec, r.loop, r.picture);
    const double fp = fixed_point_defect_of(spec, r.picture, seed);
    worst = std::max(worst, std::abs(grad - r.gradient_defect));
    worst = std::max(worst, std::abs(force - r.force_defect));
    worst = std::max(worst, norm_inf(seed - r.z_star));
    worst = std::max(worst, std::abs(fp - r.fixed_point_defect));
    return worst;
}

std::string orbit_result_json(const OrbitResult& r, const std::string& loop_file) {
    nlohmann::json j;
    j["method"] = r.method == Method::Shooting ? "shooting" : "variational";
    j["picture"] = integrate::picture_name(r.picture);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["defects"] = {{"fixed_point", r.fixed_point_defect},
                    {"force", r.force_defect},
                    {"gradient", r.gradient_defect}};
    j["loop_file"] = loop_file;
    return j.dump(2);
}

} // namespace rotorsym::orbits
