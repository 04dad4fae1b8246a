#ifndef SU11_TYPES_HPP
#define SU11_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace su11 {

using cplx = std::complex<double>;

/// Representation label of the discrete-series realization. Valid for
/// lambda > -1/2; the vacuum J3 eigenvalue is lambda/2 + 1/4.
struct IrrepParams {
    explicit IrrepParams(double lambda_) : lambda(lambda_) {
        if (!(lambda > -0.5))
            throw std::invalid_argument("IrrepParams: lambda must be > -1/2");
    }
    double lambda;

    double bargmann_shift() const { return 0.5 * lambda + 0.25; }
    /// Laguerre / Bessel order attached to this representation.
    double alpha() const { return lambda - 0.5; }
};

/// Truncation control for Fock-space vectors. tail_tol is the relative
/// squared-norm mass that may live above the retained cutoff.
struct TruncationPolicy {
    int cutoff = 32;          // initial cutoff, auto-extended as needed
    double tail_tol = 1e-14;

    static constexpr int max_cutoff = 4096;

    void validate() const {
        if (cutoff < 2)
            throw std::invalid_argument("TruncationPolicy: cutoff must be >= 2");
        if (!(tail_tol > 0.0) || tail_tol > 1e-8)
            throw std::invalid_argument("TruncationPolicy: tail_tol must lie in (0, 1e-8]");
    }
};

/// Truncated Fock-space vector over |n,lambda>, n = 0..cutoff.
/// tail_bound tracks squared-norm mass lost to truncation, both at
/// construction and through ladder-operator applications.
struct FockVector {
    FockVector(IrrepParams p, int cutoff)
        : params(p), coeffs(static_cast<size_t>(cutoff) + 1, cplx(0.0, 0.0)) {
        if (cutoff < 0) throw std::invalid_argument("FockVector: negative cutoff");
    }

    IrrepParams params;
    std::vector<cplx> coeffs;
    double tail_bound = 0.0;

    int cutoff() const { return static_cast<int>(coeffs.size()) - 1; }

    double norm2() const {
        double s = 0.0;
        for (const cplx& c : coeffs) s += std::norm(c);
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }
};

enum class Family { bgcs, nbgcs, pabgcs };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::bgcs: return "BGCS";
        case Family::nbgcs: return "NBGCS";
        case Family::pabgcs: return "PABGCS";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "BGCS" || s == "bgcs") return Family::bgcs;
    if (s == "NBGCS" || s == "nbgcs") return Family::nbgcs;
    if (s == "PABGCS" || s == "pabgcs") return Family::pabgcs;
    throw std::invalid_argument("unknown family: " + s);
}

/// Which state to build: family, coherence parameter z = |z| e^{i phi},
/// deformation / photon-addition order m, and the representation label.
struct StateSpec {
    Family family;
    cplx z;
    int m;
    IrrepParams params;

    void validate() const {
        if (m < 0) throw std::invalid_argument("StateSpec: m must be >= 0");
        if (family == Family::bgcs && m != 0)
            throw std::invalid_argument("StateSpec: BGCS requires m = 0");
    }
};

}  // namespace su11

#endif
