// Truncated Fourier series on the unit period: the function class used for
// every time profile (angular velocity, scalar-potential coefficients, drift
// rates). Periodicity, derivatives, antiderivatives and products are all
// closed-form in the coefficients, so no time quadrature happens anywhere.
#pragma once

#include <vector>

namespace rotorsym::domain {

// g(t) = c0 + sum_k (cos_coeffs[k-1] cos 2*pi*k*t + sin_coeffs[k-1] sin 2*pi*k*t)
struct FourierProfile {
    double c0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    int harmonics() const {
        return static_cast<int>(cos_coeffs.size() > sin_coeffs.size()
                                    ? cos_coeffs.size()
                                    : sin_coeffs.size());
    }
    bool is_zero() const;
};

double profile_eval(const FourierProfile& g, double t);
double profile_derivative(const FourierProfile& g, double t);
// Unique primitive of g vanishing at t = 0. Not itself 1-periodic: over one
// period it grows by the mean value c0.
double profile_antiderivative(const FourierProfile& g, double t);

FourierProfile profile_scale(double s, const FourierProfile& g);
FourierProfile profile_sum(const FourierProfile& a, const FourierProfile& b);
// Exact product via product-to-sum identities; harmonic count adds.
FourierProfile profile_product(const FourierProfile& a, const FourierProfile& b);

} // namespace rotorsym::domain
