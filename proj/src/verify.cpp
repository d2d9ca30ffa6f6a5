#include "rotorsym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "rotorsym/action.hpp"
#include "rotorsym/fields.hpp"
#include "rotorsym/integrate.hpp"
#include "rotorsym/io.hpp"
#include "rotorsym/orbits.hpp"
#include "rotorsym/threads.hpp"
#include "rotorsym/transforms.hpp"

namespace rotorsym::verify {

namespace {

using domain::DiscreteLoop;
using domain::FourierProfile;
using domain::ProblemSpec;
using integrate::Picture;

constexpr double kPi = 3.14159265358979323846;

std::string eformat(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string hexformat(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

CheckResult below(std::string name, double measured, double tol,
                  std::string note = "") {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.tolerance = tol;
    r.pass = measured < tol;
    r.note = std::move(note);
    return r;
}

FourierProfile const_profile(double c0) {
    FourierProfile p;
    p.c0 = c0;
    return p;
}

FourierProfile wobble_profile() {
    FourierProfile p;
    p.c0 = 2.0 * kPi;
    p.sin_coeffs = {1.0};   // 2*pi + sin(2*pi*t)
    return p;
}

ProblemSpec merry_2pi() {
    return transforms::make_merry_go_round(const_profile(2.0 * kPi));
}

ProblemSpec merry_wobble() {
    return transforms::make_merry_go_round(wobble_profile());
}

ProblemSpec eliminated_wobble() {
    return transforms::eliminate_scalar(merry_wobble());
}

ProblemSpec free_particle() {
    return ProblemSpec{domain::make_zero_potential(), domain::make_zero_scalar(),
                       std::nullopt};
}

ProblemSpec omega_one() {
    return transforms::make_merry_go_round(const_profile(1.0));
}

Vec4 random_unit_ball(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Vec4 v(u(rng), u(rng), u(rng), u(rng));
        if (dot(v, v) <= 1.0) return v;
    }
}

double sup_norm(const std::vector<Vec2>& g) {
    double s = 0.0;
    for (const Vec2& v : g) s = std::max(s, norm_inf(v));
    return s;
}

double sup_norm(const action::PhaseGradient& g) {
    return std::max(sup_norm(g.dq), sup_norm(g.dp));
}

// Exact rotating-frame reference: the circular orbit q(t) = (cos 2*pi*t,
// -sin 2*pi*t) of the constant-rate preset, with zero canonical momentum.
Vec2 circle_q(double t) { return Vec2{std::cos(2.0 * kPi * t), -std::sin(2.0 * kPi * t)}; }
Vec2 circle_qdot(double t) {
    return Vec2{-2.0 * kPi * std::sin(2.0 * kPi * t),
                -2.0 * kPi * std::cos(2.0 * kPi * t)};
}

DiscreteLoop circle_config_loop(int n) {
    DiscreteLoop loop;
    loop.q.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        loop.q[static_cast<std::size_t>(i)] = circle_q(static_cast<double>(i) / n);
    }
    return loop;
}

DiscreteLoop circle_phase_loop(int n) {
    DiscreteLoop loop = circle_config_loop(n);
    loop.p.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        loop.p[static_cast<std::size_t>(i)] = circle_qdot(static_cast<double>(i) / n);
    }
    return loop;
}

// --- the ten acceptance checks ---------------------------------------------

CheckResult check_picture_equivalence() {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
        FourierProfile omega;
        omega.c0 = coeff(rng);
        const int harmonics = 1 + s % 3;
        for (int k = 0; k < harmonics; ++k) {
            omega.cos_coeffs.push_back(coeff(rng));
            omega.sin_coeffs.push_back(coeff(rng));
        }
        const ProblemSpec spec = transforms::make_merry_go_round(omega);
        for (int j = 0; j < 10; ++j) {
            const Vec4 z0 = random_unit_ball(rng);
            const Vec2 v0 = z0.p() - spec.potential->value(0.0, z0.q());
            const integrate::Trajectory canon =
                integrate::integrate(spec, Picture::Canonical, z0, 0.0, 1.0, 4096);
            const integrate::Trajectory force =
                integrate::integrate(spec, Picture::Force, Vec4(z0.q(), v0), 0.0,
                                     1.0, 4096);
            for (std::size_t i = 0; i < canon.states.size(); ++i) {
                worst = std::max(worst,
                                 norm_inf(canon.states[i].q() - force.states[i].q()));
            }
        }
    }
    return below("A01 canonical and force pictures agree", worst, 1e-7,
                 "10 specs x 10 states, 4096 steps");
}

CheckResult check_closed_form_oracle() {
    const ProblemSpec spec = merry_2pi();
    const Vec4 z0(1.0, 0.0, 0.0, 0.0);
    double worst = 0.0;
    for (double t : {0.25, 0.5, 1.0}) {
        const integrate::Trajectory traj =
            integrate::integrate(spec, Picture::Canonical, z0, 0.0, t, 4096);
        const Vec4 exact(circle_q(t), Vec2{0.0, 0.0});
        worst = std::max(worst, norm_inf(traj.states.back() - exact));
    }
    const double e256 =
        norm_inf(integrate::time_one_map(spec, Picture::Canonical, z0, 256) - z0);
    const double e512 =
        norm_inf(integrate::time_one_map(spec, Picture::Canonical, z0, 512) - z0);
    const double ratio = e256 / e512;
    CheckResult r = below("A02 closed-form circular orbit oracle", worst, 1e-8,
                          "step-doubling error ratio " + eformat(ratio));
    if (!(ratio >= 12.0)) {
        r.pass = false;
        r.note += " below required 12.0";
    }
    return r;
}

CheckResult check_scalar_elimination() {
    const ProblemSpec spec = merry_wobble();
    const ProblemSpec espec = eliminated_wobble();
    std::mt19937 rng(303);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_traj = 0.0;
    for (int s = 0; s < 5; ++s) {
        const Vec4 z0(u(rng), u(rng), u(rng), u(rng));
        const integrate::Trajectory a =
            integrate::integrate(spec, Picture::Force, z0, 0.0, 1.0, 4096);
        const integrate::Trajectory b =
            integrate::integrate(espec, Picture::Force, z0, 0.0, 1.0, 4096);
        for (std::size_t i = 0; i < a.states.size(); ++i) {
            worst_traj = std::max(worst_traj, norm_inf(a.states[i] - b.states[i]));
        }
    }
    const std::vector<double> ts{0.0, 0.25, 0.5, 0.75};
    std::vector<Vec2> grid;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            grid.push_back(Vec2{-2.0 + 4.0 * (i + 0.5) / 20.0,
                                -2.0 + 4.0 * (j + 0.5) / 20.0});
        }
    }
    const fields::TwistDefectReport rep = fields::twist_defect(espec, ts, grid);
    const double twist = std::max({rep.max_adot_defect, rep.max_rot_defect,
                                   rep.max_curl_of_difference});
    CheckResult r =
        below("A03 scalar elimination preserves motion", worst_traj, 1e-7,
              "twist defect of eliminated potential " + eformat(twist));
    if (!(twist < 1e-10)) {
        r.pass = false;
        r.note += " above 1e-10";
    }
    return r;
}

CheckResult check_window_shift() {
    const ProblemSpec espec = eliminated_wobble();
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 512;
    double worst = 0.0;
    for (int l = 0; l < 5; ++l) {
        // random smooth loop from three harmonics per component
        double cx[4], sx[4], cy[4], sy[4];
        for (int k = 0; k < 4; ++k) {
            cx[k] = u(rng);
            sx[k] = u(rng);
            cy[k] = u(rng);
            sy[k] = u(rng);
        }
        DiscreteLoop loop;
        loop.q.resize(n);
        for (int i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / n;
            double x = cx[0];
            double y = cy[0];
            for (int k = 1; k < 4; ++k) {
                x += cx[k] * std::cos(2.0 * kPi * k * t) +
                     sx[k] * std::sin(2.0 * kPi * k * t);
                y += cy[k] * std::cos(2.0 * kPi * k * t) +
                     sy[k] * std::sin(2.0 * kPi * k * t);
            }
            loop.q[static_cast<std::size_t>(i)] = Vec2{x, y};
        }
        double lo = 0.0;
        double hi = 0.0;
        for (int k = 0; k <= 5; ++k) {
            const double w = action::window_shift_value(espec, loop, k);
            if (k == 0) {
                lo = hi = w;
            } else {
                lo = std::min(lo, w);
                hi = std::max(hi, w);
            }
        }
        worst = std::max(worst, hi - lo);
    }
    return below("A04 window shift independence", worst, 1e-9,
                 "5 random loops, n=512, shifts 0..5");
}

CheckResult check_field_identities() {
    const ProblemSpec spec = merry_wobble();
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> ut(0.0, 1.0);
    std::uniform_real_distribution<double> ub(-2.0, 2.0);
    double worst = 0.0;
    double vertical = 0.0;
    for (int s = 0; s < 100; ++s) {
        const double t = ut(rng);
        const Vec4 z(ub(rng), ub(rng), ub(rng), ub(rng));
        const double b = fields::rot_a(spec, t, z.q());
        const Mat4 omega = fields::omega_matrix(b);
        const Vec4 x = fields::hamiltonian_vf_x(spec, t, z);
        const Vec4 y = fields::euler_vf_y(spec, t, z);
        worst = std::max(worst,
                         norm_inf(omega.apply(x) - fields::dh_covector(spec, t, z)));
        worst = std::max(
            worst, norm_inf(omega.apply(y) - fields::lambda_dot_covector(spec, t, z)));
        vertical = std::max(vertical, std::max(std::abs(y[0]), std::abs(y[1])));
    }
    CheckResult r = below("A05 defining identities of X and Y", worst, 1e-10,
                          "100 random points");
    if (vertical != 0.0) {
        r.pass = false;
        r.note += "; Y not exactly vertical: " + eformat(vertical);
    } else {
        r.note += "; Y exactly vertical";
    }
    return r;
}

CheckResult check_hamiltonian_elimination() {
    const ProblemSpec spec = merry_wobble();
    std::mt19937 rng(606);
    std::uniform_real_distribution<double> ut(0.0, 1.0);
    std::uniform_real_distribution<double> ub(-2.0, 2.0);
    const domain::PhaseOneForm lam = fields::lambda_form(spec);
    const domain::PhaseOneForm lam_h = transforms::eliminate_hamiltonian(spec);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
        const double t = ut(rng);
        const Vec4 z(ub(rng), ub(rng), ub(rng), ub(rng));
        worst = std::max(worst, transforms::verify_yh_identity(spec, t, z));
        const Mat4 d1 = fields::d_lambda_matrix(lam, t, z);
        const Mat4 d2 = fields::d_lambda_matrix(lam_h, t, z);
        worst = std::max(worst, norm_inf(d2 - d1));
    }
    return below("A06 hamiltonian elimination identities", worst, 1e-10,
                 "vector-field sum and exterior derivative, 100 points");
}

CheckResult check_euler_flow_symplectic() {
    const Vec4 z0(0.8, -0.3, 0.4, 0.2);
    double worst = 0.0;
    for (const ProblemSpec& spec : {merry_wobble(), eliminated_wobble()}) {
        for (double t : {0.25, 0.5, 1.0}) {
            worst = std::max(
                worst, integrate::euler_flow_symplecticity_defect(spec, t, z0, 4096));
        }
    }
    return below("A07 euler flow symplecticity", worst, 1e-6,
                 "form pullback at t in {0.25, 0.5, 1}, both wobble presets");
}

CheckResult check_action_gradients() {
    const ProblemSpec spec = merry_2pi();
    const double gc512 = sup_norm(action::classical_action_gradient(
        spec, circle_config_loop(512)));
    const double gc1024 = sup_norm(action::classical_action_gradient(
        spec, circle_config_loop(1024)));
    const double gs512 = sup_norm(action::symplectic_action_gradient(
        spec, circle_phase_loop(512)));
    const double gs1024 = sup_norm(action::symplectic_action_gradient(
        spec, circle_phase_loop(1024)));
    const double ratio_c = gc512 / gc1024;
    const double ratio_s = gs512 / gs1024;

    // analytic versus central finite differences on random small loops
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double h = 1e-6;
    double fd_worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const int n = 16;
        DiscreteLoop loop;
        loop.q.resize(n);
        loop.p.resize(n);
        for (int i = 0; i < n; ++i) {
            loop.q[static_cast<std::size_t>(i)] = Vec2{u(rng), u(rng)};
            loop.p[static_cast<std::size_t>(i)] = Vec2{u(rng), u(rng)};
        }
        DiscreteLoop config;
        config.q = loop.q;
        const std::vector<Vec2> gc = action::classical_action_gradient(spec, config);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < 2; ++c) {
                DiscreteLoop plus = config;
                DiscreteLoop minus = config;
                double& qp = c == 0 ? plus.q[static_cast<std::size_t>(i)].x
                                    : plus.q[static_cast<std::size_t>(i)].y;
                double& qm = c == 0 ? minus.q[static_cast<std::size_t>(i)].x
                                    : minus.q[static_cast<std::size_t>(i)].y;
                qp += h;
                qm -= h;
                const double fd = (action::classical_action(spec, plus) -
                                   action::classical_action(spec, minus)) /
                                  (2.0 * h);
                const double an = c == 0 ? gc[static_cast<std::size_t>(i)].x
                                         : gc[static_cast<std::size_t>(i)].y;
                fd_worst = std::max(fd_worst, std::abs(fd - an));
            }
        }
        const action::PhaseGradient gs = action::symplectic_action_gradient(spec, loop);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < 4; ++c) {
                DiscreteLoop plus = loop;
                DiscreteLoop minus = loop;
                auto& vp = c < 2 ? plus.q[static_cast<std::size_t>(i)]
                                 : plus.p[static_cast<std::size_t>(i)];
                auto& vm = c < 2 ? minus.q[static_cast<std::size_t>(i)]
                                 : minus.p[static_cast<std::size_t>(i)];
                (c % 2 == 0 ? vp.x : vp.y) += h;
                (c % 2 == 0 ? vm.x : vm.y) -= h;
                const double fd = (action::symplectic_action(spec, plus) -
                                   action::symplectic_action(spec, minus)) /
                                  (2.0 * h);
                const Vec2 gv = c < 2 ? gs.dq[static_cast<std::size_t>(i)]
                                      : gs.dp[static_cast<std::size_t>(i)];
                const double an = c % 2 == 0 ? gv.x : gv.y;
                fd_worst = std::max(fd_worst, std::abs(fd - an));
            }
        }
    }

    CheckResult r = below("A08 action gradients at the critical loop",
                          std::max(gc512, gs512), 1e-3,
                          "halving ratios " + eformat(ratio_c) + "/" +
                              eformat(ratio_s) + ", fd match " + eformat(fd_worst));
    if (!(ratio_c >= 3.5 && ratio_s >= 3.5)) {
        r.pass = false;
        r.note += "; ratio below 3.5";
    }
    if (!(fd_worst < 1e-5)) {
        r.pass = false;
        r.note += "; fd mismatch above 1e-5";
    }
    return r;
}

CheckResult check_orbit_finders() {
    const ProblemSpec spec = merry_2pi();
    const orbits::OrbitResult shot = orbits::find_orbit_shooting(
        spec, Picture::Canonical, Vec4(0.9, 0.1, 0.05, -0.05), 1e-9, 25);

    std::mt19937 rng(909);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DiscreteLoop guess = circle_config_loop(256);
    for (Vec2& q : guess.q) {
        q.x += 0.01 * u(rng);
        q.y += 0.01 * u(rng);
    }
    const orbits::OrbitResult var = orbits::find_orbit_variational(
        spec, orbits::Functional::Classical, guess, 1e-9, 40);

    const bool ok_shot = shot.converged && shot.fixed_point_defect < 1e-9;
    const bool ok_var = var.converged && var.gradient_defect < 1e-8;
    const bool ok_cross = var.fixed_point_defect < 1e-6;
    CheckResult r =
        below("A09 orbit finders and cross-check", shot.fixed_point_defect, 1e-9,
              "variational gradient " + eformat(var.gradient_defect) +
                  ", cross fixed-point " + eformat(var.fixed_point_defect));
    r.pass = ok_shot && ok_var && ok_cross;
    return r;
}

// Snapshot of tests/data/regression_loop.csv; parsed, never recomputed, so
// the regression value cannot drift with the math library.
constexpr const char* kRegressionCsv = R"csv(t,q1,q2,p1,p2
0,1.25,0,0.29999999999999999,-5.2265482457436692
0.015625,1.2403810467730045,-0.078508108127947784,-0.19268788477636389,-5.2023440420450244
0.03125,1.2117551635310522,-0.15682197877961926,-0.68063091589173697,-5.1299645306620709
0.046875,1.1648077388078451,-0.23472765395250211,-1.1591299352196847,-5.0101067658560918
0.0625,1.1006562278079237,-0.311972754246435,-1.623576735629908,-4.8439250434230896
0.078125,1.0208138226032557,-0.38824977559574314,-2.0694984405420085,-4.6330197841942624
0.09375,0.92714047039381775,-0.46318227976847348,-2.4926005801720827,-4.3794221211085276
0.109375,0.8217830338667691,-0.53631475612332247,-2.8888084496243374,-4.085574338291984
0.125,0.70710678118654757,-0.60710678118654748,-3.2543063505266927,-3.7543063505266931
0.140625,0.5856207036596135,-0.67493192532241397,-3.585574338291984,-3.3888084496243374
0.15625,0.45989937492832988,-0.73908165905141654,-3.8794221211085276,-2.9926005801720836
0.171875,0.33250417857109732,-0.79877430311810038,-4.1330197841942624,-2.5694984405420094
0.1875,0.20590673706845297,-0.85316885439263201,-4.3439250434230896,-2.1235767356299085
0.203125,0.082417274178825994,-0.90138331243024872,-4.5101067658560927,-1.6591299352196847
0.21875,-0.035879561111693353,-0.94251693716672147,-4.6299645306620709,-1.1806309158917374
0.234375,-0.14717917977124684,-0.975675694470584,-4.7023440420450235,-0.69268788477636467
0.25,-0.24999999999999994,-1,-4.7265482457436692,-0.20000000000000032
0.265625,-0.34321346043036827,-1.0146937588738099,-4.7023440420450244,0.29268788477636409
0.28125,-0.42606020514394993,-1.0190536236397394,-4.6299645306620709,0.78063091589173661
0.296875,-0.4981520803300985,-1.012497359034169,-4.5101067658560927,1.2591299352196839
0.3125,-0.55946012766172659,-0.99459021062994146,-4.3439250434230896,1.7235767356299079
0.328125,-0.61028929508089824,-0.96506822557860961,-4.1330197841942624,2.1694984405420086
0.34375,-0.65124109111087458,-0.92385756555367415,-3.8794221211085285,2.5926005801720815
0.359375,-0.68316586466767759,-0.87108898140306013,-3.5855743382919845,2.9888084496243366
0.375,-0.70710678118654746,-0.80710678118654755,-3.2543063505266931,3.3543063505266923
0.390625,-0.72423787285870489,-0.73247181220396851,-2.8888084496243374,3.6855743382919837
0.40625,-0.73579875421127283,-0.64795818627073087,-2.4926005801720827,3.9794221211085281
0.421875,-0.74302870609345451,-0.55454369805625237,-2.0694984405420098,4.2330197841942621
0.4375,-0.74710283721464987,-0.45339411048374467,-1.6235767356299085,4.4439250434230892
0.453125,-0.74907293265657249,-0.3458417005564226,-1.1591299352196851,4.6101067658560915
0.46875,-0.7498153972754088,-0.23335866525263765,-0.68063091589173874,4.7299645306620706
0.484375,-0.74998840657138921,-0.1175261725311737,-0.192687884776365,4.8023440420450232
0.5,-0.75,-1.4695761589768238e-16,0.29999999999999938,4.8265482457436688
0.515625,-0.74998840657138932,0.11752617253117342,0.79268788477636387,4.8023440420450241
0.53125,-0.74981539727540869,0.23335866525263735,1.2806309158917375,4.7299645306620706
0.546875,-0.7490729326565726,0.34584170055642227,1.7591299352196836,4.6101067658560924
0.5625,-0.74710283721464998,0.45339411048374439,2.2235767356299072,4.4439250434230901
0.578125,-0.74302870609345451,0.55454369805625214,2.6694984405420081,4.2330197841942621
0.59375,-0.73579875421127283,0.64795818627073065,3.0926005801720815,3.9794221211085281
0.609375,-0.72423787285870489,0.73247181220396829,3.4888084496243357,3.6855743382919841
0.625,-0.70710678118654757,0.80710678118654744,3.8543063505266923,3.3543063505266937
0.640625,-0.6831658646676777,0.87108898140305979,4.1855743382919819,2.9888084496243392
0.65625,-0.65124109111087469,0.92385756555367393,4.4794221211085272,2.5926005801720824
0.671875,-0.61028929508089824,0.9650682255786095,4.7330197841942621,2.1694984405420095
0.6875,-0.55946012766172704,0.99459021062994135,4.9439250434230884,1.723576735629911
0.703125,-0.49815208033009872,1.012497359034169,5.1101067658560915,1.2591299352196854
0.71875,-0.42606020514395027,1.0190536236397394,5.2299645306620697,0.78063091589173905
0.734375,-0.3432134604303681,1.0146937588738096,5.3023440420450241,0.29268788477636309
0.75,-0.25000000000000017,1,5.3265482457436688,-0.1999999999999991
0.765625,-0.14717917977124756,0.97567569447058422,5.3023440420450241,-0.69268788477636134
0.78125,-0.035879561111693381,0.94251693716672147,5.2299645306620706,-1.1806309158917372
0.796875,0.082417274178825661,0.90138331243024872,5.1101067658560924,-1.6591299352196833
0.8125,0.20590673706845322,0.85316885439263179,4.9439250434230884,-2.1235767356299093
0.828125,0.33250417857109699,0.79877430311810049,4.7330197841942621,-2.5694984405420085
0.84375,0.45989937492832922,0.73908165905141687,4.4794221211085281,-2.9926005801720814
0.859375,0.58562070365961361,0.67493192532241386,4.1855743382919837,-3.3888084496243378
0.875,0.70710678118654724,0.60710678118654771,3.8543063505266937,-3.7543063505266923
0.890625,0.82178303386676843,0.5363147561233228,3.4888084496243392,-4.0855743382919822
0.90625,0.92714047039381764,0.46318227976847348,3.0926005801720824,-4.3794221211085276
0.921875,1.0208138226032553,0.38824977559574336,2.6694984405420095,-4.6330197841942615
0.9375,1.100656227807923,0.31197275424643556,2.2235767356299112,-4.8439250434230887
0.953125,1.1648077388078451,0.23472765395250225,1.7591299352196856,-5.0101067658560918
0.96875,1.2117551635310519,0.15682197877961965,1.2806309158917393,-5.12996453066207
0.984375,1.2403810467730045,0.078508108127947701,0.79268788477636343,-5.2023440420450244
)csv";

constexpr double kRegressionValue = -0x1.d1bd6980003fep+4;

bool loops_identical(const DiscreteLoop& a, const DiscreteLoop& b) {
    if (a.n() != b.n() || a.is_phase() != b.is_phase()) return false;
    for (int i = 0; i < a.n(); ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        if (!same_bits(a.q[k].x, b.q[k].x) || !same_bits(a.q[k].y, b.q[k].y)) {
            return false;
        }
        if (a.is_phase() &&
            (!same_bits(a.p[k].x, b.p[k].x) || !same_bits(a.p[k].y, b.p[k].y))) {
            return false;
        }
    }
    return true;
}

CheckResult check_regression(const std::string& data_dir) {
    const ProblemSpec espec = eliminated_wobble();
    const DiscreteLoop loop = regression_loop();
    const double v1 = action::symplectic_action(espec, loop);

    const int saved_cap = 0;
    set_thread_cap(4);
    const double v2 = action::symplectic_action(espec, loop);
    set_thread_cap(saved_cap);

    const double vref = action::reference::symplectic_action(espec, loop);

    CheckResult r;
    r.name = "A10 stored-loop action byte identity";
    r.tolerance = 0.0;
    r.measured = std::abs(v1 - regression_expected());
    bool ok = same_bits(v1, regression_expected());
    r.note = "value " + hexformat(v1);
    if (!same_bits(v1, v2)) {
        ok = false;
        r.note += "; thread-cap run differs";
    }
    if (!(std::abs(vref - v1) <= 1e-12 * std::max(1.0, std::abs(v1)))) {
        ok = false;
        r.note += "; serial reference differs: " + eformat(vref - v1);
    }
    if (!data_dir.empty()) {
        std::ifstream in(data_dir + "/regression_loop.csv");
        if (!in) {
            ok = false;
            r.note += "; stored loop file missing";
        } else {
            const DiscreteLoop stored = io::read_loop_csv(in);
            if (!loops_identical(stored, loop)) {
                ok = false;
                r.note += "; stored loop differs from embedded copy";
            }
        }
    }
    r.pass = ok;
    return r;
}

} // namespace

DiscreteLoop regression_loop() {
    std::istringstream in(kRegressionCsv);
    return io::read_loop_csv(in);
}

double regression_expected() { return kRegressionValue; }

std::vector<CheckResult> acceptance_checks(const std::string& data_dir) {
    std::vector<CheckResult> out;
    out.push_back(check_picture_equivalence());
    out.push_back(check_closed_form_oracle());
    out.push_back(check_scalar_elimination());
    out.push_back(check_window_shift());
    out.push_back(check_field_identities());
    out.push_back(check_hamiltonian_elimination());
    out.push_back(check_euler_flow_symplectic());
    out.push_back(check_action_gradients());
    out.push_back(check_orbit_finders());
    out.push_back(check_regression(data_dir));
    return out;
}

std::vector<CheckResult> spec_checks(const ProblemSpec& spec,
                                     const std::string& label) {
    std::vector<CheckResult> out;
    const domain::Box box = spec.domain_hint.value_or(domain::Box{});

    std::vector<double> ts{0.0, 0.25, 0.5, 0.75};
    std::vector<Vec2> grid;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            grid.push_back(Vec2{
                box.lo.x + (box.hi.x - box.lo.x) * (i + 0.5) / 20.0,
                box.lo.y + (box.hi.y - box.lo.y) * (j + 0.5) / 20.0});
        }
    }
    const fields::TwistDefectReport rep = fields::twist_defect(spec, ts, grid);
    out.push_back(below(label + ": twist-periodic vector potential",
                        std::max({rep.max_adot_defect, rep.max_rot_defect,
                                  rep.max_curl_of_difference}),
                        1e-10, "period-shift defects on a 20x20 grid"));

    double worst_pic = 0.0;
    const Vec4 states[3] = {Vec4(0.5, 0.2, -0.1, 0.3), Vec4(-0.4, 0.6, 0.2, -0.5),
                            Vec4(0.1, -0.7, -0.3, 0.2)};
    for (const Vec4& z0 : states) {
        const Vec2 v0 = z0.p() - spec.potential->value(0.0, z0.q());
        const integrate::Trajectory canon =
            integrate::integrate(spec, Picture::Canonical, z0, 0.0, 1.0, 2048);
        const integrate::Trajectory force = integrate::integrate(
            spec, Picture::Force, Vec4(z0.q(), v0), 0.0, 1.0, 2048);
        for (std::size_t i = 0; i < canon.states.size(); ++i) {
            worst_pic = std::max(worst_pic,
                                 norm_inf(canon.states[i].q() - force.states[i].q()));
        }
    }
    out.push_back(below(label + ": canonical/force picture agreement", worst_pic,
                        1e-7, "3 states, 2048 steps"));

    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ut(0.0, 1.0);
    std::uniform_real_distribution<double> ux(box.lo.x, box.hi.x);
    std::uniform_real_distribution<double> uy(box.lo.y, box.hi.y);
    std::uniform_real_distribution<double> up(-2.0, 2.0);
    double worst_xy = 0.0;
    double worst_yh = 0.0;
    for (int s = 0; s < 20; ++s) {
        const double t = ut(rng);
        const Vec4 z(ux(rng), uy(rng), up(rng), up(rng));
        const double b = fields::rot_a(spec, t, z.q());
        const Mat4 omega = fields::omega_matrix(b);
        const Vec4 x = fields::hamiltonian_vf_x(spec, t, z);
        const Vec4 y = fields::euler_vf_y(spec, t, z);
        worst_xy = std::max(
            worst_xy, norm_inf(omega.apply(x) - fields::dh_covector(spec, t, z)));
        worst_xy = std::max(
            worst_xy, norm_inf(omega.apply(y) - fields::lambda_dot_covector(spec, t, z)));
        worst_yh = std::max(worst_yh, transforms::verify_yh_identity(spec, t, z));
    }
    out.push_back(below(label + ": defining identities of X and Y", worst_xy, 1e-10,
                        "20 random points"));
    out.push_back(below(label + ": hamiltonian elimination identity", worst_yh,
                        1e-10, "20 random points"));
    return out;
}

std::vector<NamedSpec> shipped_presets() {
    std::vector<NamedSpec> out;
    out.push_back({"merry-2pi", merry_2pi()});
    out.push_back({"merry-wobble", merry_wobble()});
    out.push_back({"merry-wobble-eliminated", eliminated_wobble()});
    out.push_back({"free", free_particle()});
    out.push_back({"omega-one", omega_one()});
    return out;
}

void write_report(std::ostream& out, const std::vector<CheckResult>& checks) {
    int failed = 0;
    char line[256];
    std::snprintf(line, sizeof line, "%-6s %-52s %-12s %-12s %s\n", "status",
                  "check", "measured", "tolerance", "notes");
    out << line;
    for (const CheckResult& c : checks) {
        if (!c.pass) ++failed;
        std::snprintf(line, sizeof line, "%-6s %-52s %-12s %-12s %s\n",
                      c.pass ? "pass" : "FAIL", c.name.c_str(),
                      eformat(c.measured).c_str(), eformat(c.tolerance).c_str(),
                      c.note.c_str());
        out << line;
    }
    std::snprintf(line, sizeof line, "%zu checks, %d failed\n", checks.size(),
                  failed);
    out << line;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

} // namespace rotorsym::verify
