#include "su11/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "su11/special_functions.hpp"

namespace su11 {

namespace {

const double kLogPi = std::log(4.0 * std::atan(1.0));

bool lambda_outside_stated_family(const IrrepParams& p) {
    // the measure kernel is stated for lambda - 1/2 in {0, 2, 4, ...};
    // the moment identity is Gamma-analytic in lambda, so other values
    // are allowed with a warning flag rather than rejected
    const double t = p.lambda - 0.5;
    if (t < -1e-12) return true;
    const double r = t - 2.0 * std::nearbyint(t / 2.0);
    return std::abs(r) > 1e-12;
}

}  // namespace

MomentCheckReport nbgcs_moment_check(int n, int m, const IrrepParams& p) {
    if (n < 0 || m < 0) throw std::invalid_argument("nbgcs_moment_check: n, m must be >= 0");
    const double a = p.lambda + 0.5;
    MomentCheckReport rep;
    rep.family = Family::nbgcs;
    rep.n = n;
    rep.lambda_warning = lambda_outside_stated_family(p);

    // Mellin transform of the measure kernel at s = n+1 is
    // n! Gamma(a+m+n)^2 / Gamma(a+n); the Gamma(1-s)/Gamma(1-s) pole pair
    // cancels analytically before evaluation.
    rep.log_computed = std::lgamma(n + 1.0) + 2.0 * std::lgamma(a + m + n) -
                       std::lgamma(a + n) - kLogPi - log_pochhammer(a, m) -
                       std::lgamma(a + m);
    // moment the diagonal matrix elements force on the identity
    rep.log_required = std::lgamma(n + 1.0) + 2.0 * log_pochhammer(a + m, n) - kLogPi -
                       log_pochhammer(a, n);
    rep.ratio = std::exp(rep.log_computed - rep.log_required);
    rep.computed_moment = std::exp(rep.log_computed);
    rep.required_moment = std::exp(rep.log_required);
    return rep;
}

MomentCheckReport pabgcs_moment_check(int n, int m, const IrrepParams& p) {
    if (n < 0 || m < 0) throw std::invalid_argument("pabgcs_moment_check: n, m must be >= 0");
    const double a = p.lambda + 0.5;
    MomentCheckReport rep;
    rep.family = Family::pabgcs;
    rep.n = n;
    rep.lambda_warning = lambda_outside_stated_family(p);

    rep.log_computed = 2.0 * std::lgamma(n + 1.0) + std::lgamma(a + m + n) -
                       std::lgamma(m + n + 1.0) + std::lgamma(m + 1.0) -
                       std::log(2.0) - kLogPi - std::lgamma(a + m);
    rep.log_required = 2.0 * std::lgamma(n + 1.0) + log_pochhammer(a + m, n) - kLogPi -
                       log_pochhammer(m + 1.0, n);
    rep.ratio = std::exp(rep.log_computed - rep.log_required);
    rep.computed_moment = std::exp(rep.log_computed);
    rep.required_moment = std::exp(rep.log_required);
    return rep;
}

double measure_pointwise_m0(double x, const IrrepParams& p) {
    if (!(x > 0.0)) throw std::invalid_argument("measure_pointwise_m0: x must be > 0");
    const double nu = p.lambda - 0.5;
    return 2.0 / (4.0 * std::atan(1.0)) * bessel_i(nu, 2.0 * x) * bessel_k(nu, 2.0 * x);
}

}  // namespace su11
