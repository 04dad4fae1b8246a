#ifndef SU11_ALGEBRA_HPP
#define SU11_ALGEBRA_HPP

#include "su11/types.hpp"

namespace su11 {

/// Matrix element <n+1| J+ |n>.
inline double raise_coefficient(int n, const IrrepParams& p) {
    return std::sqrt((n + 1.0) * (n + 1.0 + p.lambda - 0.5));
}

/// Matrix element <n-1| J- |n>; zero on the vacuum.
inline double lower_coefficient(int n, const IrrepParams& p) {
    return n <= 0 ? 0.0 : std::sqrt(n * (n + p.lambda - 0.5));
}

/// J3 eigenvalue on |n,lambda>.
inline double j3_eigenvalue(int n, const IrrepParams& p) {
    return n + 0.5 * p.lambda + 0.25;
}

/// Hamiltonian eigenvalue on |n,lambda>.
inline double energy_eigenvalue(int n, const IrrepParams& p) {
    return 2.0 * n + p.lambda + 0.5;
}

FockVector basis_state(int n, const IrrepParams& p, int cutoff);

FockVector raise(const FockVector& v);
FockVector lower(const FockVector& v);
FockVector j3(const FockVector& v);

/// m-fold application of raise. Rejects m > cutoff/2 so truncation loss
/// stays bounded.
FockVector raise_power(const FockVector& v, int m);

/// exp(-i t H) on the truncated space; preserves every |c_n| exactly.
FockVector hamiltonian_phase(const FockVector& v, double t);

/// Max residual of [J+,J-] = -2 J3 and [J3,J+] = J+ over basis states
/// with interior index n <= cutoff-2.
double verify_commutators(int cutoff, const IrrepParams& p);

}  // namespace su11

#endif
