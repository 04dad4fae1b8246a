#ifndef SU11_MEASURES_HPP
#define SU11_MEASURES_HPP

#include "su11/types.hpp"

namespace su11 {

/// One power moment of a resolution-of-identity measure: the value the
/// measure's Mellin transform produces versus the value the diagonal
/// matrix elements force. Log-scale internally; the linear fields
/// overflow to +inf for large n while the ratio stays exact.
struct MomentCheckReport {
    Family family = Family::nbgcs;
    int n = 0;
    double log_computed = 0.0;
    double log_required = 0.0;
    double computed_moment = 0.0;
    double required_moment = 0.0;
    double ratio = 0.0;
    bool lambda_warning = false;  // lambda - 1/2 not an even nonnegative integer
};

/// Mellin moment s = n+1 of the deformed-vacuum measure versus the
/// moment forced by the identity resolution; ratio contracts to 1.
MomentCheckReport nbgcs_moment_check(int n, int m, const IrrepParams& p);

/// Same check for the photon-added measure on the shifted subspace;
/// the ratio is constant in n and reported, not presupposed.
MomentCheckReport pabgcs_moment_check(int n, int m, const IrrepParams& p);

/// Pointwise m = 0 measure density (2/pi) I_{l-1/2}(2x) K_{l-1/2}(2x),
/// x > 0.
double measure_pointwise_m0(double x, const IrrepParams& p);

}  // namespace su11

#endif
