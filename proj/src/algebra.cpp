#include "su11/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

FockVector basis_state(int n, const IrrepParams& p, int cutoff) {
    if (n < 0 || n > cutoff) throw std::invalid_argument("basis_state: index outside cutoff");
    FockVector v(p, cutoff);
    v.coeffs[static_cast<size_t>(n)] = 1.0;
    return v;
}

FockVector raise(const FockVector& v) {
    const int N = v.cutoff();
    FockVector out(v.params, N);
    out.tail_bound = v.tail_bound;
    for (int n = N - 1; n >= 0; --n)
        out.coeffs[n + 1] = raise_coefficient(n, v.params) * v.coeffs[n];
    // mass pushed past the cutoff is recorded, not raised as an error
    out.tail_bound += std::norm(raise_coefficient(N, v.params) * v.coeffs[N]);
    return out;
}

FockVector lower(const FockVector& v) {
    const int N = v.cutoff();
    FockVector out(v.params, N);
    out.tail_bound = v.tail_bound;
    for (int n = 1; n <= N; ++n)
        out.coeffs[n - 1] = lower_coefficient(n, v.params) * v.coeffs[n];
    return out;
}

FockVector j3(const FockVector& v) {
    const int N = v.cutoff();
    FockVector out(v.params, N);
    out.tail_bound = v.tail_bound;
    for (int n = 0; n <= N; ++n)
        out.coeffs[n] = j3_eigenvalue(n, v.params) * v.coeffs[n];
    return out;
}

FockVector raise_power(const FockVector& v, int m) {
    if (m < 0) throw std::invalid_argument("raise_power: m must be >= 0");
    if (2 * m > v.cutoff())
        throw std::invalid_argument("raise_power: m exceeds cutoff/2, truncation loss unbounded");
    FockVector out = v;
    for (int k = 0; k < m; ++k) out = raise(out);
    return out;
}

FockVector hamiltonian_phase(const FockVector& v, double t) {
    const int N = v.cutoff();
    FockVector out(v.params, N);
    out.tail_bound = v.tail_bound;
    for (int n = 0; n <= N; ++n) {
        const double phi = -t * energy_eigenvalue(n, v.params);
        out.coeffs[n] = v.coeffs[n] * cplx(std::cos(phi), std::sin(phi));
    }
    return out;
}

double verify_commutators(int cutoff, const IrrepParams& p) {
    if (cutoff < 4) throw std::invalid_argument("verify_commutators: cutoff must be >= 4");
    double worst = 0.0;
    // top two indices excluded: the identities hold only where raising
    // stays inside the truncated space
    for (int n = 0; n <= cutoff - 2; ++n) {
        FockVector e = basis_state(n, p, cutoff);

        FockVector r1 = raise(lower(e));
        const FockVector lr = lower(raise(e));
        const FockVector j = j3(e);
        double res1 = 0.0;
        for (int k = 0; k <= cutoff; ++k)
            res1 += std::norm(r1.coeffs[k] - lr.coeffs[k] + 2.0 * j.coeffs[k]);
        worst = std::max(worst, std::sqrt(res1));

        const FockVector jr = j3(raise(e));
        const FockVector rj = raise(j3(e));
        const FockVector r = raise(e);
        double res2 = 0.0;
        for (int k = 0; k <= cutoff; ++k)
            res2 += std::norm(jr.coeffs[k] - rj.coeffs[k] - r.coeffs[k]);
        worst = std::max(worst, std::sqrt(res2));
    }
    return worst;
}

}  // namespace su11
