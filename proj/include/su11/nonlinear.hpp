#ifndef SU11_NONLINEAR_HPP
#define SU11_NONLINEAR_HPP

#include "su11/types.hpp"

namespace su11 {

enum class NonlinearityKind { nbgcs_f, pabgcs_f };

/// Diagonal deformation f(N) that turns the lowering operator into the
/// state's annihilator. The photon-added variant has a removable
/// singularity at n = m - lambda - 1/2; evaluation there is rejected
/// (checks use the multiplied-through identity instead).
struct NonlinearityFunction {
    NonlinearityKind kind;
    int m;
    IrrepParams params;

    double operator()(int n) const;
};

/// || f_m(N) J- v - z v || over indices 0..top-1 for the deformed
/// displaced vacuum; the top index is excluded (its J- image needs the
/// first truncated coefficient).
double nbgcs_eigen_residual(const StateSpec& spec, const TruncationPolicy& trunc = {});

/// Same residual including the truncation-boundary index; tracks the
/// tail mass rather than rounding.
double nbgcs_eigen_residual_with_boundary(const StateSpec& spec,
                                          const TruncationPolicy& trunc = {});

/// Multiplied-through eigen-relation residual for the photon-added
/// state: (N+l+1/2)[1 - 2m(N+l/2+3/4-m/2)/((N+1)(N+l+1/2))] J- v
/// against z (N+l+1/2-m) v, componentwise over indices 0..top-1.
double pabgcs_eigen_residual(const StateSpec& spec, const TruncationPolicy& trunc = {});

/// Element-wise deviation between exp(z/(N+l-1/2) J+) (J+)^m and
/// (J+)^m exp(z/(N+l-1/2+m) J+) on the truncated space (the exponential
/// series terminate exactly), combined with the resolvent-power identity
/// residual below. Requires cutoff >= 4m + 16.
double shift_identity_check(int m, cplx z, const IrrepParams& p, int cutoff);

/// Residual of ((N+l-1/2+m)^{-1} J+)^n = (J+)^n / (N+l+1/2+m)_n applied
/// to the basis vector e_k.
double raise_resolvent_power_residual(int n, int k, int m, const IrrepParams& p, int cutoff);

}  // namespace su11

#endif
