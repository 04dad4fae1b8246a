#include "su11/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "su11/algebra.hpp"
#include "su11/special_functions.hpp"

namespace su11 {

double nbgcs_norm(double z_abs, int m, const IrrepParams& p) {
    if (z_abs < 0) throw std::invalid_argument("nbgcs_norm: |z| must be >= 0");
    if (m < 0) throw std::invalid_argument("nbgcs_norm: m must be >= 0");
    if (z_abs == 0.0) return 1.0;
    const double a = p.lambda + 0.5;
    const HypergeometricParams hp({a}, {a + m, a + m});
    return pfq(hp, z_abs * z_abs).value;
}

double pabgcs_norm(double z_abs, int m, const IrrepParams& p) {
    if (z_abs < 0) throw std::invalid_argument("pabgcs_norm: |z| must be >= 0");
    if (m < 0) throw std::invalid_argument("pabgcs_norm: m must be >= 0");
    if (z_abs == 0.0) return 1.0;
    const double a = p.lambda + 0.5;
    const HypergeometricParams hp({m + 1.0}, {1.0, a + m});
    return pfq(hp, z_abs * z_abs).value;
}

namespace {

// log |unnormalized coefficient| ladders of the two families.
// Deformed vacuum, Fock index n:
//   ln|c_n| = n ln r - ln (a+m)_n + (ln (a)_n - ln n!)/2
// Photon-added, Fock index n+m:
//   ln|d_n| = n ln r - ln n! + (ln (m+1)_n - ln (a+m)_n)/2
double log_coeff_nbgcs(int n, double log_r, int m, double a) {
    return n * log_r - log_pochhammer(a + m, n) +
           0.5 * (log_pochhammer(a, n) - std::lgamma(n + 1.0));
}

double log_coeff_pabgcs(int n, double log_r, int m, double a) {
    return n * log_r - std::lgamma(n + 1.0) +
           0.5 * (log_pochhammer(m + 1.0, n) - log_pochhammer(a + m, n));
}

struct Profile {
    std::vector<double> scaled;  // |c_n|^2 / peak, n = 0..top
    double tail_rel = 0.0;       // estimated relative mass above top
    int top = 0;
};

// Grow the cutoff until the relative tail estimate sits below tail_tol,
// then trim back to the smallest cutoff that still satisfies it. The
// coefficients decay super-exponentially, so the doubling terminates
// after a few rounds and the geometric estimate at the top is valid.
template <typename LogCoeff>
Profile resolve_cutoff(LogCoeff log_coeff, const TruncationPolicy& trunc) {
    int N = std::max(trunc.cutoff, 8);
    for (;; N *= 2) {
        if (N > TruncationPolicy::max_cutoff)
            throw std::runtime_error(
                "state construction: cutoff ceiling (4096) exceeded; |z| too large for this "
                "truncation scale");

        std::vector<double> lp(static_cast<size_t>(N) + 2);
        double peak = -1e300;
        for (int n = 0; n <= N + 1; ++n) {
            lp[n] = 2.0 * log_coeff(n);
            peak = std::max(peak, lp[n]);
        }
        const double rho = std::exp(lp[N + 1] - lp[N]);
        if (!(rho < 0.5)) continue;

        std::vector<double> scaled(lp.size());
        double total = 0.0;
        for (size_t n = 0; n < lp.size(); ++n) {
            scaled[n] = std::exp(lp[n] - peak);
            total += scaled[n];
        }
        const double beyond = scaled[N + 1] * rho / (1.0 - rho);  // mass above N+1
        total += beyond;
        const double top_tail = (scaled[N + 1] + beyond) / total;
        if (!(top_tail < trunc.tail_tol && scaled[N] / total < trunc.tail_tol)) continue;

        // trim: smallest N' whose above-cutoff mass stays within tail_tol
        std::vector<double> suffix(lp.size() + 1, 0.0);
        suffix[lp.size()] = beyond;
        for (int n = static_cast<int>(lp.size()) - 1; n >= 0; --n)
            suffix[n] = suffix[n + 1] + scaled[n];
        Profile prof;
        int top = N;
        for (int cand = 2; cand <= N; ++cand) {
            if (suffix[cand + 1] / total < trunc.tail_tol) {
                top = cand;
                break;
            }
        }
        prof.top = top;
        prof.tail_rel = suffix[top + 1] / total;
        prof.scaled.assign(scaled.begin(), scaled.begin() + top + 1);
        return prof;
    }
}

FockVector assemble(const IrrepParams& params, const Profile& prof, cplx z, int shift) {
    const int cutoff = prof.top + shift;
    FockVector v(params, cutoff);
    double mass = 0.0;
    for (double s : prof.scaled) mass += s;
    const double inv_norm = 1.0 / std::sqrt(mass);
    const double phi = std::arg(z);
    for (int n = 0; n <= prof.top; ++n) {
        const double mag = std::sqrt(prof.scaled[n]) * inv_norm;
        v.coeffs[n + shift] = mag * cplx(std::cos(n * phi), std::sin(n * phi));
    }
    v.tail_bound = prof.tail_rel;
    return v;
}

}  // namespace

FockVector nbgcs(const StateSpec& spec, const TruncationPolicy& trunc) {
    spec.validate();
    trunc.validate();
    if (spec.family == Family::pabgcs)
        throw std::invalid_argument("nbgcs: spec is for the photon-added family");
    const double r = std::abs(spec.z);
    const double a = spec.params.lambda + 0.5;
    if (r == 0.0) return basis_state(0, spec.params, std::min(trunc.cutoff, 32));

    const double log_r = std::log(r);
    const int m = spec.m;
    const Profile prof = resolve_cutoff(
        [&](int n) { return log_coeff_nbgcs(n, log_r, m, a); }, trunc);
    return assemble(spec.params, prof, spec.z, 0);
}

FockVector pabgcs(const StateSpec& spec, const TruncationPolicy& trunc) {
    spec.validate();
    trunc.validate();
    const double r = std::abs(spec.z);
    const double a = spec.params.lambda + 0.5;
    if (r == 0.0) return basis_state(spec.m, spec.params, std::max(std::min(trunc.cutoff, 32), spec.m));

    const double log_r = std::log(r);
    const int m = spec.m;
    const Profile prof = resolve_cutoff(
        [&](int n) { return log_coeff_pabgcs(n, log_r, m, a); }, trunc);
    return assemble(spec.params, prof, spec.z, m);
}

FockVector make_state(const StateSpec& spec, const TruncationPolicy& trunc) {
    switch (spec.family) {
        case Family::bgcs: {
            StateSpec s = spec;
            s.family = Family::nbgcs;
            s.m = 0;
            return nbgcs(s, trunc);
        }
        case Family::nbgcs: return nbgcs(spec, trunc);
        case Family::pabgcs: return pabgcs(spec, trunc);
    }
    throw std::logic_error("make_state: bad family");
}

FockVector pabgcs_from_diagram(const StateSpec& spec, const TruncationPolicy& trunc) {
    StateSpec base = spec;
    base.family = Family::nbgcs;
    // the raise amplifies top coefficients by O(cutoff) factors, so the
    // intermediate state is built far below the requested tail before the
    // result is trimmed back to the same criterion the direct path uses
    TruncationPolicy deep = trunc;
    deep.tail_tol = std::max(1e-30, trunc.tail_tol * 1e-10);
    FockVector v = nbgcs(base, deep);

    // embed with headroom so the m-fold raise loses nothing
    FockVector wide(v.params, v.cutoff() + 2 * spec.m);
    std::copy(v.coeffs.begin(), v.coeffs.end(), wide.coeffs.begin());

    FockVector raised = raise_power(wide, spec.m);
    const double nrm2 = raised.norm2();
    if (!(nrm2 > 0.0)) throw std::runtime_error("pabgcs_from_diagram: zero norm");

    std::vector<double> suffix(raised.coeffs.size() + 1, 0.0);
    for (int n = static_cast<int>(raised.coeffs.size()) - 1; n >= 0; --n)
        suffix[n] = suffix[n + 1] + std::norm(raised.coeffs[n]);
    int top = raised.cutoff();
    for (int cand = std::max(2, spec.m); cand <= raised.cutoff(); ++cand) {
        if (suffix[cand + 1] / nrm2 < trunc.tail_tol) {
            top = cand;
            break;
        }
    }

    FockVector out(v.params, top);
    const double inv = 1.0 / std::sqrt(suffix[0] - suffix[top + 1]);
    for (int n = 0; n <= top; ++n) out.coeffs[n] = raised.coeffs[n] * inv;
    out.tail_bound = suffix[top + 1] / nrm2;
    return out;
}

cplx overlap(const FockVector& u, const FockVector& v) {
    if (u.params.lambda != v.params.lambda)
        throw std::invalid_argument("overlap: representation labels differ");
    const int N = std::min(u.cutoff(), v.cutoff());
    cplx s(0.0, 0.0);
    for (int n = 0; n <= N; ++n) s += std::conj(u.coeffs[n]) * v.coeffs[n];
    return s;
}

cplx nbgcs_overlap_closed(cplx z1, int m1, cplx z2, int m2, const IrrepParams& p) {
    const double a = p.lambda + 0.5;
    const HypergeometricParams hp({a}, {a + m1, a + m2});
    const cplx num = pfq(hp, std::conj(z1) * z2).value;
    return num / std::sqrt(nbgcs_norm(std::abs(z1), m1, p) * nbgcs_norm(std::abs(z2), m2, p));
}

cplx pabgcs_overlap_closed(cplx z1, cplx z2, int m, const IrrepParams& p) {
    const double a = p.lambda + 0.5;
    const HypergeometricParams hp({m + 1.0}, {1.0, a + m});
    const cplx num = pfq(hp, std::conj(z1) * z2).value;
    return num / std::sqrt(pabgcs_norm(std::abs(z1), m, p) * pabgcs_norm(std::abs(z2), m, p));
}

cplx pabgcs_overlap_unequal(cplx z, int m_bra, int m_ket, const IrrepParams& p) {
    const int m = m_ket, mp = m_bra;
    const double a = p.lambda + 0.5;
    const double r2 = std::norm(z);
    if (r2 == 0.0) return m == mp ? cplx(1.0, 0.0) : cplx(0.0, 0.0);

    // sum_{n >= max(0, m'-m)} |z|^{2n} (m+1)_n / (n! (a+m)_n (n+m-m')!)
    double sum = 0.0;
    const double log_r2 = std::log(r2);
    const int n0 = std::max(0, mp - m);
    double prev = 0.0;
    for (int n = n0; n < 100000; ++n) {
        const double lt = n * log_r2 + log_pochhammer(m + 1.0, n) - std::lgamma(n + 1.0) -
                          log_pochhammer(a + m, n) - std::lgamma(n + m - mp + 1.0);
        const double t = std::exp(lt);
        sum += t;
        if (n > n0 + 4 && t < 1e-17 * sum && t < prev) break;
        prev = t;
    }
    const double pref =
        std::exp(0.5 * (std::lgamma(m + 1.0) + log_pochhammer(a, mp) - std::lgamma(mp + 1.0) -
                        log_pochhammer(a, m)));
    const cplx zpow = std::pow(std::conj(z), m - mp);  // integer power, single-valued
    return pref * zpow * sum /
           std::sqrt(pabgcs_norm(std::abs(z), mp, p) * pabgcs_norm(std::abs(z), m, p));
}

double evolve_check(const StateSpec& spec, double t, const TruncationPolicy& trunc) {
    if (spec.family == Family::pabgcs)
        throw std::invalid_argument("evolve_check: family must be BGCS or NBGCS");
    const FockVector evolved = hamiltonian_phase(make_state(spec, trunc), t);

    StateSpec rotated = spec;
    rotated.z = spec.z * cplx(std::cos(2.0 * t), -std::sin(2.0 * t));
    FockVector ref = make_state(rotated, trunc);

    const double phi = -t * (spec.params.lambda + 0.5);
    const cplx global(std::cos(phi), std::sin(phi));
    const int N = std::max(evolved.cutoff(), ref.cutoff());
    double dev2 = 0.0;
    for (int n = 0; n <= N; ++n) {
        const cplx ev = n <= evolved.cutoff() ? evolved.coeffs[n] : cplx(0.0);
        const cplx rf = n <= ref.cutoff() ? ref.coeffs[n] : cplx(0.0);
        dev2 += std::norm(ev - global * rf);
    }
    return std::sqrt(dev2);
}

}  // namespace su11
