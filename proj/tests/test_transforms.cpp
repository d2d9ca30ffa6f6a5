#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rotorsym/action.hpp"
#include "rotorsym/fields.hpp"
#include "rotorsym/transforms.hpp"

using namespace rotorsym;
using namespace rotorsym::domain;
namespace fields = rotorsym::fields;
namespace transforms = rotorsym::transforms;

namespace {
constexpr double kPi = 3.14159265358979323846;

ProblemSpec wobble_spec() {
    FourierProfile omega;
    omega.c0 = 2.0 * kPi;
    omega.sin_coeffs = {1.0};
    return transforms::make_merry_go_round(omega);
}
} // namespace

TEST_CASE("rotating-frame construction pairs the potential with its well") {
    FourierProfile omega;
    omega.c0 = 3.0;
    const ProblemSpec spec = transforms::make_merry_go_round(omega);
    const Vec2 q{0.5, -0.2};
    CHECK(norm_inf(spec.potential->value(0.4, q) - 3.0 * j0(q)) < 1e-14);
    // phi = -1/2 omega^2 |q|^2
    CHECK(spec.scalar->value(0.4, q) ==
          Catch::Approx(-4.5 * dot(q, q)).epsilon(1e-13));
}

TEST_CASE("scalar elimination leaves zero-scalar problems untouched") {
    ProblemSpec spec;
    spec.potential = make_rotational(FourierProfile{.c0 = 1.0, .cos_coeffs = {}, .sin_coeffs = {}});
    spec.scalar = make_zero_scalar();
    const ProblemSpec out = transforms::eliminate_scalar(spec);
    CHECK(out.potential.get() == spec.potential.get());
    CHECK(out.scalar.get() == spec.scalar.get());
}

TEST_CASE("scalar elimination preserves the force dynamics pointwise") {
    const ProblemSpec spec = wobble_spec();
    const ProblemSpec elim = transforms::eliminate_scalar(spec);
    CHECK(elim.scalar->is_zero());
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double t = 0.04 * trial;
        const Vec2 q{u(rng), u(rng)};
        const Vec2 v{u(rng), u(rng)};
        CHECK(norm_inf(fields::force_rhs(spec, t, q, v) -
                       fields::force_rhs(elim, t, q, v)) < 1e-9);
        // the curl is untouched: the appended part is a gradient field
        CHECK(fields::rot_a(spec, t, q) ==
              Catch::Approx(fields::rot_a(elim, t, q)).margin(1e-11));
    }
}

TEST_CASE("eliminated potential keeps the twist conditions") {
    std::vector<double> ts{0.0, 0.3, 0.6};
    std::vector<Vec2> qs;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) qs.push_back(Vec2{0.4 * i, 0.4 * j});
    const auto rep =
        fields::twist_defect(transforms::eliminate_scalar(wobble_spec()), ts, qs);
    CHECK(rep.max_rot_defect < 1e-10);
    CHECK(rep.max_curl_of_difference < 1e-9);
    // the value of the potential shifts by a gradient over one period, but
    // its time derivative is honestly periodic
    CHECK(rep.max_adot_defect < 1e-10);

    // the shift itself is visibly nonzero: twisted-periodic, not periodic
    const ProblemSpec elim = transforms::eliminate_scalar(wobble_spec());
    const Vec2 q{1.0, 0.0};
    CHECK(norm_inf(elim.potential->value(1.0, q) - elim.potential->value(0.0, q)) > 1.0);
}

TEST_CASE("Hamiltonian elimination produces the shifted primitive form") {
    const ProblemSpec spec = wobble_spec();
    const PhaseOneForm lh = transforms::eliminate_hamiltonian(spec);
    const double t = 0.35;
    const Vec2 q{0.6, -0.3}, p{0.2, 0.9};

    const Vec2 gint_expect =
        spec.scalar->gradient_time_antiderivative()->value(t, q);
    const Vec2 alpha = lh.alpha(t, q, p);
    CHECK(norm_inf(alpha - (p + spec.potential->value(t, q) + gint_expect)) <
          1e-13);
    const Vec2 beta = lh.beta(t, q, p);
    CHECK(norm_inf(beta - t * p) < 1e-14);

    // closed-form time derivatives match finite differences
    const double h = 1e-6;
    const Vec2 adot_fd =
        (1.0 / (2.0 * h)) * (lh.alpha(t + h, q, p) - lh.alpha(t - h, q, p));
    CHECK(norm_inf(lh.alpha_dot(t, q, p) - adot_fd) < 1e-6);
    const Vec2 bdot_fd =
        (1.0 / (2.0 * h)) * (lh.beta(t + h, q, p) - lh.beta(t - h, q, p));
    CHECK(norm_inf(lh.beta_dot(t, q, p) - bdot_fd) < 1e-6);
}

TEST_CASE("both primitives differentiate to the same symplectic matrix") {
    const ProblemSpec spec = wobble_spec();
    const PhaseOneForm lam = fields::lambda_form(spec);
    const PhaseOneForm lh = transforms::eliminate_hamiltonian(spec);
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double t = 0.1 + 0.1 * trial;
        const Vec4 z{u(rng), u(rng), u(rng), u(rng)};
        const Mat4 om = fields::omega_matrix(fields::rot_a(spec, t, z.q()));
        CHECK(norm_inf(fields::d_lambda_matrix(lam, t, z) - om) < 1e-11);
        CHECK(norm_inf(fields::d_lambda_matrix(lh, t, z) - om) < 1e-11);
    }
}

TEST_CASE("eliminated-form Euler field equals Y plus X") {
    const ProblemSpec spec = wobble_spec();
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double t = 0.05 * trial;
        const Vec4 z{u(rng), u(rng), u(rng), u(rng)};
        CHECK(transforms::verify_yh_identity(spec, t, z) < 1e-10);
    }
}

TEST_CASE("elimination shifts the one-window action by the gauge boundary term") {
    // The absorbed gradient is twist-periodic, not periodic: over one window
    // it changes the classical action by -Psi(1, q_0) where Psi is the time
    // antiderivative of the scalar at the seam sample. With the midpoint
    // panel rule the remaining mismatch between vertex and midpoint sums of
    // the scalar is exact too, so the whole identity holds to roundoff.
    FourierProfile omega;
    omega.c0 = 2.0 * kPi;
    const ProblemSpec spec = transforms::make_merry_go_round(omega);
    const ProblemSpec elim = transforms::eliminate_scalar(spec);

    std::mt19937 rng(642);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 64;
    std::vector<Vec2> q;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        q.push_back({std::cos(2.0 * kPi * t) + 0.3 * u(rng),
                     -std::sin(2.0 * kPi * t) + 0.3 * u(rng)});
    }
    const DiscreteLoop loop = make_configuration_loop(std::move(q));

    const double diff = action::classical_action(elim, loop) -
                        action::classical_action(spec, loop);
    // Psi(1, q) = -2 pi^2 |q|^2 for this well; the correction is the
    // vertex-minus-midpoint quadrature gap of the same quantity.
    const double tau_sq = 2.0 * kPi * kPi;
    double expected = -tau_sq * dot(loop.q[0], loop.q[0]);
    for (int i = 0; i < n; ++i) {
        const Vec2 qi = loop.q[static_cast<std::size_t>(i)];
        const Vec2 qn = loop.q[static_cast<std::size_t>((i + 1) % n)];
        const Vec2 mid = 0.5 * (qi + qn);
        expected += tau_sq / n * (dot(qi, qi) - dot(mid, mid));
    }
    CHECK(diff == Catch::Approx(expected).margin(1e-10));
}
