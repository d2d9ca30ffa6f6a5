#include "rotorsym/problem.hpp"

#include <cmath>
#include <utility>

namespace rotorsym::domain {

namespace {

// q^e for small integer e; e < 0 only arises multiplied by a zero factor,
// so it must return a finite value.
double ipow(double q, int e) {
    if (e <= 0) return e == 0 ? 1.0 : 0.0;
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= q;
    return r;
}

class RotationalPotential final : public VectorPotential {
  public:
    explicit RotationalPotential(FourierProfile omega) : omega_(std::move(omega)) {}

    Vec2 value(double t, Vec2 q) const override {
        return profile_eval(omega_, t) * j0(q);
    }
    Vec2 time_derivative(double t, Vec2 q) const override {
        return profile_derivative(omega_, t) * j0(q);
    }
    double rot(double t, Vec2) const override {
        return 2.0 * profile_eval(omega_, t);
    }
    Mat2 space_jacobian(double t, Vec2) const override {
        const double w = profile_eval(omega_, t);
        Mat2 j;
        j.m = {{{0.0, -w}, {w, 0.0}}};
        return j;
    }
    bool is_zero() const override { return omega_.is_zero(); }

  private:
    FourierProfile omega_;
};

class RadialDriftPotential final : public VectorPotential {
  public:
    explicit RadialDriftPotential(DriftCoefficient c) : c_(std::move(c)) {}

    Vec2 value(double t, Vec2 q) const override { return c_.value(t) * q; }
    Vec2 time_derivative(double t, Vec2 q) const override {
        return c_.derivative(t) * q;
    }
    double rot(double, Vec2) const override { return 0.0; }
    Mat2 space_jacobian(double t, Vec2) const override {
        const double c = c_.value(t);
        Mat2 j;
        j.m = {{{c, 0.0}, {0.0, c}}};
        return j;
    }
    bool is_zero() const override { return c_.constant == 0.0 && c_.rate.is_zero(); }

  private:
    DriftCoefficient c_;
};

class GradientDriftPotential final : public VectorPotential {
  public:
    explicit GradientDriftPotential(std::vector<GradientTerm> terms)
        : terms_(std::move(terms)) {}

    Vec2 value(double t, Vec2 q) const override {
        Vec2 a;
        for (const auto& g : terms_) a += g.c.value(t) * monomial_gradient(g, q);
        return a;
    }
    Vec2 time_derivative(double t, Vec2 q) const override {
        Vec2 a;
        for (const auto& g : terms_) a += g.c.derivative(t) * monomial_gradient(g, q);
        return a;
    }
    double rot(double, Vec2) const override { return 0.0; }
    Mat2 space_jacobian(double t, Vec2 q) const override {
        Mat2 j;
        for (const auto& g : terms_) {
            const double c = g.c.value(t);
            const double hxx = g.i * (g.i - 1) * ipow(q.x, g.i - 2) * ipow(q.y, g.j);
            const double hyy = g.j * (g.j - 1) * ipow(q.x, g.i) * ipow(q.y, g.j - 2);
            const double hxy = g.i * g.j * ipow(q.x, g.i - 1) * ipow(q.y, g.j - 1);
            j.m[0][0] += c * hxx;
            j.m[0][1] += c * hxy;
            j.m[1][0] += c * hxy;
            j.m[1][1] += c * hyy;
        }
        return j;
    }
    bool is_zero() const override { return terms_.empty(); }

  private:
    static Vec2 monomial_gradient(const GradientTerm& g, Vec2 q) {
        return {g.i * ipow(q.x, g.i - 1) * ipow(q.y, g.j),
                g.j * ipow(q.x, g.i) * ipow(q.y, g.j - 1)};
    }

    std::vector<GradientTerm> terms_;
};

class UniformPotential final : public VectorPotential {
  public:
    UniformPotential(Vec2 direction, std::vector<double> poly)
        : dir_(direction), poly_(std::move(poly)) {}

    Vec2 value(double t, Vec2) const override { return poly_eval(t) * dir_; }
    Vec2 time_derivative(double t, Vec2) const override {
        return poly_derivative(t) * dir_;
    }
    double rot(double, Vec2) const override { return 0.0; }
    Mat2 space_jacobian(double, Vec2) const override { return Mat2{}; }
    bool is_zero() const override { return poly_.empty(); }

  private:
    double poly_eval(double t) const {
        double r = 0.0;
        for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) r = r * t + *it;
        return r;
    }
    double poly_derivative(double t) const {
        double r = 0.0;
        for (int k = static_cast<int>(poly_.size()) - 1; k >= 1; --k)
            r = r * t + k * poly_[static_cast<std::size_t>(k)];
        return r;
    }

    Vec2 dir_;
    std::vector<double> poly_;
};

class SumPotential final : public VectorPotential {
  public:
    explicit SumPotential(std::vector<VectorPotentialPtr> parts)
        : parts_(std::move(parts)) {}

    Vec2 value(double t, Vec2 q) const override {
        Vec2 a;
        for (const auto& p : parts_) a += p->value(t, q);
        return a;
    }
    Vec2 time_derivative(double t, Vec2 q) const override {
        Vec2 a;
        for (const auto& p : parts_) a += p->time_derivative(t, q);
        return a;
    }
    double rot(double t, Vec2 q) const override {
        double r = 0.0;
        for (const auto& p : parts_) r += p->rot(t, q);
        return r;
    }
    Mat2 space_jacobian(double t, Vec2 q) const override {
        Mat2 j;
        for (const auto& p : parts_) j = j + p->space_jacobian(t, q);
        return j;
    }
    bool is_zero() const override {
        for (const auto& p : parts_)
            if (!p->is_zero()) return false;
        return true;
    }

  private:
    std::vector<VectorPotentialPtr> parts_;
};

class PolynomialScalar final : public ScalarPotential {
  public:
    explicit PolynomialScalar(std::vector<Monomial> terms) : terms_(std::move(terms)) {}

    double value(double t, Vec2 q) const override {
        double v = 0.0;
        for (const auto& m : terms_)
            v += profile_eval(m.coeff, t) * ipow(q.x, m.i) * ipow(q.y, m.j);
        return v;
    }
    Vec2 gradient(double t, Vec2 q) const override {
        Vec2 g;
        for (const auto& m : terms_) {
            const double c = profile_eval(m.coeff, t);
            g += c * Vec2{m.i * ipow(q.x, m.i - 1) * ipow(q.y, m.j),
                          m.j * ipow(q.x, m.i) * ipow(q.y, m.j - 1)};
        }
        return g;
    }
    VectorPotentialPtr gradient_time_antiderivative() const override {
        std::vector<GradientTerm> terms;
        terms.reserve(terms_.size());
        for (const auto& m : terms_)
            terms.push_back({m.i, m.j, DriftCoefficient{0.0, m.coeff}});
        return make_gradient_drift(std::move(terms));
    }
    bool is_zero() const override {
        for (const auto& m : terms_)
            if (!m.coeff.is_zero()) return false;
        return true;
    }

  private:
    std::vector<Monomial> terms_;
};

} // namespace

VectorPotentialPtr make_rotational(const FourierProfile& omega) {
    return std::make_shared<RotationalPotential>(omega);
}

VectorPotentialPtr make_radial_drift(const DriftCoefficient& c) {
    return std::make_shared<RadialDriftPotential>(c);
}

VectorPotentialPtr make_gradient_drift(std::vector<GradientTerm> terms) {
    return std::make_shared<GradientDriftPotential>(std::move(terms));
}

VectorPotentialPtr make_uniform(Vec2 direction, std::vector<double> poly_coeffs) {
    return std::make_shared<UniformPotential>(direction, std::move(poly_coeffs));
}

VectorPotentialPtr make_potential_sum(std::vector<VectorPotentialPtr> parts) {
    if (parts.size() == 1) return parts.front();
    return std::make_shared<SumPotential>(std::move(parts));
}

VectorPotentialPtr make_zero_potential() {
    return std::make_shared<UniformPotential>(Vec2{0.0, 0.0}, std::vector<double>{});
}

ScalarPotentialPtr make_polynomial_scalar(std::vector<Monomial> terms) {
    return std::make_shared<PolynomialScalar>(std::move(terms));
}

ScalarPotentialPtr make_quadratic_isotropic(const FourierProfile& kappa) {
    const FourierProfile half = profile_scale(-0.5, kappa);
    return make_polynomial_scalar({{2, 0, half}, {0, 2, half}});
}

ScalarPotentialPtr make_zero_scalar() {
    return make_polynomial_scalar({});
}

DiscreteLoop make_configuration_loop(std::vector<Vec2> q) {
    if (q.size() < 8)
        throw std::invalid_argument("loop needs at least 8 samples, got " +
                                    std::to_string(q.size()));
    DiscreteLoop l;
    l.q = std::move(q);
    return l;
}

DiscreteLoop make_phase_loop(std::vector<Vec2> q, std::vector<Vec2> p) {
    if (q.size() != p.size())
        throw std::invalid_argument("phase loop q/p sample counts differ");
    DiscreteLoop l = make_configuration_loop(std::move(q));
    l.p = std::move(p);
    return l;
}

} // namespace rotorsym::domain
