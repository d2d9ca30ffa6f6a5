#include "rotorsym/fourier.hpp"

#include <cmath>
#include <cstddef>

namespace rotorsym::domain {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double coeff(const std::vector<double>& v, std::size_t k1) {
    return k1 < v.size() ? v[k1] : 0.0;
}
} // namespace

bool FourierProfile::is_zero() const {
    if (c0 != 0.0) return false;
    for (double a : cos_coeffs)
        if (a != 0.0) return false;
    for (double b : sin_coeffs)
        if (b != 0.0) return false;
    return true;
}

double profile_eval(const FourierProfile& g, double t) {
    double s = g.c0;
    const int kmax = g.harmonics();
    for (int k = 1; k <= kmax; ++k) {
        const double w = kTwoPi * k * t;
        s += coeff(g.cos_coeffs, k - 1) * std::cos(w);
        s += coeff(g.sin_coeffs, k - 1) * std::sin(w);
    }
    return s;
}

double profile_derivative(const FourierProfile& g, double t) {
    double s = 0.0;
    const int kmax = g.harmonics();
    for (int k = 1; k <= kmax; ++k) {
        const double w = kTwoPi * k * t;
        s += -kTwoPi * k * coeff(g.cos_coeffs, k - 1) * std::sin(w);
        s += kTwoPi * k * coeff(g.sin_coeffs, k - 1) * std::cos(w);
    }
    return s;
}

double profile_antiderivative(const FourierProfile& g, double t) {
    double s = g.c0 * t;
    const int kmax = g.harmonics();
    for (int k = 1; k <= kmax; ++k) {
        const double w = kTwoPi * k * t;
        const double inv = 1.0 / (kTwoPi * k);
        s += coeff(g.cos_coeffs, k - 1) * std::sin(w) * inv;
        s += coeff(g.sin_coeffs, k - 1) * (1.0 - std::cos(w)) * inv;
    }
    return s;
}

FourierProfile profile_scale(double s, const FourierProfile& g) {
    FourierProfile r = g;
    r.c0 *= s;
    for (double& a : r.cos_coeffs) a *= s;
    for (double& b : r.sin_coeffs) b *= s;
    return r;
}

FourierProfile profile_sum(const FourierProfile& a, const FourierProfile& b) {
    FourierProfile r;
    const int kmax = a.harmonics() > b.harmonics() ? a.harmonics() : b.harmonics();
    r.c0 = a.c0 + b.c0;
    r.cos_coeffs.resize(kmax, 0.0);
    r.sin_coeffs.resize(kmax, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        r.cos_coeffs[k - 1] = coeff(a.cos_coeffs, k - 1) + coeff(b.cos_coeffs, k - 1);
        r.sin_coeffs[k - 1] = coeff(a.sin_coeffs, k - 1) + coeff(b.sin_coeffs, k - 1);
    }
    return r;
}

FourierProfile profile_product(const FourierProfile& a, const FourierProfile& b) {
    const int ka = a.harmonics(), kb = b.harmonics();
    FourierProfile r;
    r.cos_coeffs.assign(static_cast<std::size_t>(ka + kb), 0.0);
    r.sin_coeffs.assign(static_cast<std::size_t>(ka + kb), 0.0);

    // Accumulate into harmonic h; h = 0 is the constant term (sin 0 drops out).
    auto add_cos = [&](int h, double v) {
        if (h == 0)
            r.c0 += v;
        else
            r.cos_coeffs[h - 1] += v;
    };
    auto add_sin = [&](int h, double v) {
        if (h == 0) return;
        if (h > 0)
            r.sin_coeffs[h - 1] += v;
        else
            r.sin_coeffs[-h - 1] -= v;
    };

    r.c0 += a.c0 * b.c0;
    for (int k = 1; k <= kb; ++k) {
        add_cos(k, a.c0 * coeff(b.cos_coeffs, k - 1));
        add_sin(k, a.c0 * coeff(b.sin_coeffs, k - 1));
    }
    for (int k = 1; k <= ka; ++k) {
        add_cos(k, b.c0 * coeff(a.cos_coeffs, k - 1));
        add_sin(k, b.c0 * coeff(a.sin_coeffs, k - 1));
    }
    for (int k = 1; k <= ka; ++k) {
        const double ak = coeff(a.cos_coeffs, k - 1);
        const double bk = coeff(a.sin_coeffs, k - 1);
        for (int m = 1; m <= kb; ++m) {
            const double cm = coeff(b.cos_coeffs, m - 1);
            const double dm = coeff(b.sin_coeffs, m - 1);
            const int d = k - m, s = k + m;
            // cos*cos = (cos(k-m) + cos(k+m))/2
            add_cos(std::abs(d), 0.5 * ak * cm);
            add_cos(s, 0.5 * ak * cm);
            // sin*sin = (cos(k-m) - cos(k+m))/2
            add_cos(std::abs(d), 0.5 * bk * dm);
            add_cos(s, -0.5 * bk * dm);
            // cos(k)*sin(m) = (sin(k+m) - sin(k-m))/2
            add_sin(s, 0.5 * ak * dm);
            add_sin(-d, 0.5 * ak * dm);
            // sin(k)*cos(m) = (sin(k+m) + sin(k-m))/2
            add_sin(s, 0.5 * bk * cm);
            add_sin(d, 0.5 * bk * cm);
        }
    }
    return r;
}

} // namespace rotorsym::domain
