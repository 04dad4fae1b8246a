#ifndef SU11_POSITION_HPP
#define SU11_POSITION_HPP

#include "su11/types.hpp"

namespace su11 {

/// Half-line quadrature grid built from generalized Gauss-Laguerre
/// nodes in u = x^2 with weight u^alpha e^{-u}, alpha = lambda - 1/2.
/// Every integrand in this module has the form x^{2 lambda} e^{-x^2}
/// times a smooth factor s(x^2); the rule integrates it as
/// sum_i w_i s(u_i). Abscissas are x_i = sqrt(u_i), increasing; the
/// largest node puts the Gaussian tail mass beyond x_max under 1e-16.
struct PositionGrid {
    std::vector<double> x;  // abscissas on the half-line
    std::vector<double> u;  // u_i = x_i^2, Gauss-Laguerre nodes
    std::vector<double> w;  // weights for the u-space weight function
    double alpha = 0.0;

    static PositionGrid gauss_laguerre(int nodes, const IrrepParams& p);
    /// Grid sized to integrate |psi|^2 of this vector exactly.
    static PositionGrid for_vector(const FockVector& v);

    double x_max() const { return x.empty() ? 0.0 : x.back(); }
};

/// <x|n,lambda>: normalized associated-Laguerre eigenfunction of the
/// half-line Hamiltonian, evaluated by the stable three-term recurrence.
double eigenfunction(double x, int n, const IrrepParams& p);

/// Quadrature of the n,n' eigenfunction product; |result - delta_{nn'}|
/// is the orthonormality defect.
double orthonormality_check(int n, int n_prime, const IrrepParams& p, const PositionGrid& grid);

/// <x|v> = sum_n c_n <x|n,lambda>.
cplx wavefunction(double x, const FockVector& v);

/// Quadrature of |<x|v>|^2 over the half-line.
double parseval_check(const FockVector& v, const PositionGrid& grid);

/// Closed-form m = 0 wavefunction (Bessel-J factor summed through the
/// 0F1 series). Phases follow principal branches; only the magnitude is
/// contract-comparable against the Fock series.
cplx bgcs_wavefunction_closed(double x, cplx z, const IrrepParams& p);

}  // namespace su11

#endif
