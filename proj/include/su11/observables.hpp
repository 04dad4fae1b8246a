#ifndef SU11_OBSERVABLES_HPP
#define SU11_OBSERVABLES_HPP

#include <string>
#include <vector>

#include "su11/types.hpp"

namespace su11 {

/// Full set of first and second moments plus the derived statistics.
/// X1 = (J+ + J-)/2, X2 = (J- - J+)/(2i); S_i = 2 var(X_i)/|<J3>| - 1.
struct ObservableReport {
    double expN = 0.0;
    double expN2 = 0.0;
    cplx expJp{};
    cplx expJm{};
    cplx expJp2{};
    cplx expJm2{};
    double expJpJm = 0.0;
    double expJ3 = 0.0;
    double varX1 = 0.0;
    double varX2 = 0.0;
    double g2 = 0.0;
    double mandelQ = 0.0;
    double S1 = 0.0;
    double S2 = 0.0;
};

/// Moments by direct Fock sums over the coefficients; the ground truth
/// every closed form is checked against.
ObservableReport expectation_suite(const FockVector& v);

/// Hypergeometric-ratio closed forms for the deformed displaced vacuum.
ObservableReport nbgcs_closed_suite(cplx z, int m, const IrrepParams& p);

/// Hypergeometric-ratio closed forms for the photon-added state.
/// m = 0 routes to nbgcs_closed_suite (the m = 0 series degenerate).
ObservableReport pabgcs_closed_suite(cplx z, int m, const IrrepParams& p);

struct FieldDeviation {
    std::string field;
    double rel = 0.0;  // |a-b| / max(|a|,|b|,1)
};

/// Per-field comparison of two reports. Fields exceeding the discrepancy
/// threshold are surfaced instead of silently absorbed.
struct CrossCheck {
    double max_rel = 0.0;
    std::vector<FieldDeviation> fields;

    std::vector<FieldDeviation> discrepancies(double threshold = 1e-6) const;
};

CrossCheck compare_reports(const ObservableReport& oracle, const ObservableReport& closed);

}  // namespace su11

#endif
