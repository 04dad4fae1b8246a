#include "su11/nonlinear.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "su11/algebra.hpp"
#include "su11/special_functions.hpp"
#include "su11/states.hpp"

namespace su11 {

double NonlinearityFunction::operator()(int n) const {
    if (n < 0) throw std::invalid_argument("NonlinearityFunction: n must be >= 0");
    const double l = params.lambda;
    switch (kind) {
        case NonlinearityKind::nbgcs_f:
            return 1.0 + m / (n + l + 0.5);
        case NonlinearityKind::pabgcs_f: {
            const double denom = n + l + 0.5 - m;
            if (std::abs(denom) < 1e-12)
                throw std::domain_error(
                    "NonlinearityFunction: removable singularity at n = m - lambda - 1/2; "
                    "use the multiplied-through identity");
            const double bracket =
                1.0 - 2.0 * m * (n + 0.5 * l + 0.75 - 0.5 * m) / ((n + 1.0) * (n + l + 0.5));
            return (n + l + 0.5) / denom * bracket;
        }
    }
    throw std::logic_error("NonlinearityFunction: bad kind");
}

namespace {

double eigen_residual_impl(const StateSpec& spec, const TruncationPolicy& trunc,
                           bool include_boundary) {
    StateSpec s = spec;
    if (s.family == Family::bgcs) {
        s.family = Family::nbgcs;
        s.m = 0;
    }
    const FockVector v = nbgcs(s, trunc);
    const FockVector w = lower(v);
    const NonlinearityFunction f{NonlinearityKind::nbgcs_f, s.m, s.params};

    const int top = v.cutoff();
    const int last = include_boundary ? top : top - 1;
    double res2 = 0.0;
    for (int n = 0; n <= last; ++n) res2 += std::norm(f(n) * w.coeffs[n] - s.z * v.coeffs[n]);
    return std::sqrt(res2);
}

}  // namespace

double nbgcs_eigen_residual(const StateSpec& spec, const TruncationPolicy& trunc) {
    return eigen_residual_impl(spec, trunc, false);
}

double nbgcs_eigen_residual_with_boundary(const StateSpec& spec, const TruncationPolicy& trunc) {
    return eigen_residual_impl(spec, trunc, true);
}

double pabgcs_eigen_residual(const StateSpec& spec, const TruncationPolicy& trunc) {
    StateSpec s = spec;
    s.family = Family::pabgcs;
    const FockVector v = pabgcs(s, trunc);
    const FockVector w = lower(v);
    const double l = s.params.lambda;
    const int m = s.m;

    // (N+l+1/2)[1 - 2m(N+l/2+3/4-m/2)/((N+1)(N+l+1/2))] J- v = z (N+l+1/2-m) v,
    // i.e. the eigen-relation with the resolvent factor cleared; the raw
    // prefactor is undefined at n = m - l - 1/2 while this form is total.
    const int top = v.cutoff();
    double res2 = 0.0;
    for (int n = 0; n <= top - 1; ++n) {
        const double g =
            ((n + 1.0) * (n + l + 0.5) - 2.0 * m * (n + 0.5 * l + 0.75 - 0.5 * m)) / (n + 1.0);
        const cplx lhs = g * w.coeffs[n];
        const cplx rhs = s.z * (n + l + 0.5 - m) * v.coeffs[n];
        res2 += std::norm(lhs - rhs);
    }
    return std::sqrt(res2);
}

namespace {

// column n of exp(D J+) where D reads the post-raise index: the operator
// only raises, so the series terminates at the cutoff and every entry is
// a finite, exact sum.
std::vector<cplx> exp_shifted_raise_column(int n, cplx z, double diag_offset,
                                           const IrrepParams& p, int cutoff) {
    std::vector<cplx> col(static_cast<size_t>(cutoff) + 1, cplx(0.0));
    cplx amp(1.0, 0.0);
    col[n] = amp;
    for (int k = n, step = 1; k < cutoff; ++k, ++step) {
        amp *= z * raise_coefficient(k, p) / (k + 1.0 + diag_offset) / static_cast<double>(step);
        col[k + 1] = amp;
    }
    return col;
}

}  // namespace

double raise_resolvent_power_residual(int n, int k, int m, const IrrepParams& p, int cutoff) {
    if (k + n > cutoff) throw std::invalid_argument("resolvent power: k + n exceeds cutoff");
    // left side: n-fold (diag o J+) chain
    double lhs = 1.0;
    for (int j = 1; j <= n; ++j)
        lhs *= raise_coefficient(k + j - 1, p) / (k + j + p.lambda - 0.5 + m);
    // right side: Pochhammer diagonal on the source index, then (J+)^n
    double rhs = 1.0;
    for (int j = 0; j < n; ++j) rhs *= raise_coefficient(k + j, p);
    rhs /= std::exp(log_pochhammer(k + p.lambda + 0.5 + m, n));
    return std::abs(lhs - rhs);
}

double shift_identity_check(int m, cplx z, const IrrepParams& p, int cutoff) {
    if (cutoff < 4 * m + 16)
        throw std::invalid_argument("shift_identity_check: cutoff must be >= 4m + 16");

    double worst = 0.0;
    for (int n = 0; n + m <= cutoff; ++n) {
        // A e_n = exp(z/(N+l-1/2) J+) (J+)^m e_n
        double chain = 1.0;
        for (int j = 0; j < m; ++j) chain *= raise_coefficient(n + j, p);
        std::vector<cplx> a = exp_shifted_raise_column(n + m, z, p.lambda - 0.5, p, cutoff);
        for (cplx& c : a) c *= chain;

        // B e_n = (J+)^m exp(z/(N+l-1/2+m) J+) e_n
        std::vector<cplx> e = exp_shifted_raise_column(n, z, p.lambda - 0.5 + m, p, cutoff);
        std::vector<cplx> b(static_cast<size_t>(cutoff) + 1, cplx(0.0));
        for (int i = n; i + m <= cutoff; ++i) {
            double up = 1.0;
            for (int j = 0; j < m; ++j) up *= raise_coefficient(i + j, p);
            b[i + m] = up * e[i];
        }

        for (int i = 0; i <= cutoff; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    }

    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k + n <= std::min(cutoff, 12); ++k)
            worst = std::max(worst, raise_resolvent_power_residual(n, k, m, p, cutoff));
    return worst;
}

}  // namespace su11
