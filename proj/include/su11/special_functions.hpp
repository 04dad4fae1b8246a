#ifndef SU11_SPECIAL_FUNCTIONS_HPP
#define SU11_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <vector>

#include "su11/types.hpp"

namespace su11 {

/// log of the rising factorial (a)_n = Gamma(a+n)/Gamma(a), a > 0.
double log_pochhammer(double a, int n);

/// Numerator / denominator parameter lists of a generalized
/// hypergeometric series pFq. All series used here have p <= q+1 and are
/// entire in the argument.
struct HypergeometricParams {
    std::vector<double> upper;
    std::vector<double> lower;

    HypergeometricParams(std::vector<double> up, std::vector<double> lo);
};

template <typename T>
struct SeriesResult {
    T value{};
    int terms_used = 0;
    double error_bound = 0.0;  // relative geometric tail estimate
};

/// Sum pFq(upper; lower; x) by term recurrence. Terminates once three
/// consecutive terms fall below tol * |partial sum|.
SeriesResult<double> pfq(const HypergeometricParams& params, double x, double tol = 1e-15);
SeriesResult<cplx> pfq(const HypergeometricParams& params, cplx x, double tol = 1e-15);

/// Modified Bessel I_nu by ascending series, nu > -1, x >= 0.
double bessel_i(double nu, double x);

/// Modified Bessel K_nu by trapezoidal quadrature of the cosh-integral
/// representation, x > 0.
double bessel_k(double nu, double x);

}  // namespace su11

#endif
