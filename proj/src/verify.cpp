#include "su11/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "su11/algebra.hpp"
#include "su11/measures.hpp"
#include "su11/nonlinear.hpp"
#include "su11/observables.hpp"
#include "su11/position.hpp"
#include "su11/special_functions.hpp"
#include "su11/states.hpp"

namespace su11 {

namespace {

// bit-stable uniform in [0,1): identical across platforms for a given seed
double uniform(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }

CheckResult make_result(std::string name, double residual, double threshold,
                        std::string note = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.residual = residual;
    r.threshold = threshold;
    r.pass = residual <= threshold;
    r.note = std::move(note);
    return r;
}

CheckResult sign_claim(std::string name, double worst, std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.residual = worst;
    r.threshold = 0.0;
    r.pass = worst < 0.0;
    r.note = std::move(note);
    return r;
}

double coeff_distance(const FockVector& a, const FockVector& b) {
    const int N = std::max(a.cutoff(), b.cutoff());
    double worst = 0.0;
    for (int n = 0; n <= N; ++n) {
        const cplx ca = n <= a.cutoff() ? a.coeffs[n] : cplx(0.0);
        const cplx cb = n <= b.cutoff() ? b.coeffs[n] : cplx(0.0);
        worst = std::max(worst, std::abs(ca - cb));
    }
    return worst;
}

// align the arbitrary global phase before coefficientwise comparison
double coeff_distance_phase_aligned(const FockVector& a, const FockVector& b) {
    int ref = 0;
    for (int n = 0; n <= std::min(a.cutoff(), b.cutoff()); ++n)
        if (std::abs(a.coeffs[n]) > std::abs(a.coeffs[ref])) ref = n;
    if (std::abs(a.coeffs[ref]) == 0.0) return coeff_distance(a, b);
    cplx phase = b.coeffs[ref] / a.coeffs[ref];
    const double mag = std::abs(phase);
    phase = mag > 0.0 ? phase / mag : cplx(1.0);
    FockVector rot = a;
    for (cplx& c : rot.coeffs) c *= phase;
    return coeff_distance(rot, b);
}

const std::vector<double> kGridLambda{0.5, 2.5};
const std::vector<int> kGridM{0, 1, 2, 3, 4, 5};
const std::vector<double> kGridZ{0.25, 0.5, 1.0, 2.0, 4.0};
const std::vector<double> kGridPhi{0.0, 4.0 * std::atan(1.0) / 3.0};

}  // namespace

std::vector<CheckResult> verify_algebra() {
    std::vector<CheckResult> out;

    double worst = 0.0;
    for (double lam : {0.5, 2.5, 4.5})
        worst = std::max(worst, verify_commutators(64, IrrepParams(lam)));
    out.push_back(make_result("commutator residual (cutoff 64, lambda 1/2,5/2,9/2)", worst,
                              1e-12));

    std::mt19937_64 eng(0x511a1u);
    const IrrepParams p(0.5);
    const int N = 48;
    double adj = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        FockVector u(p, N), v(p, N);
        for (int n = 0; n <= N; ++n) {
            u.coeffs[n] = cplx(uniform(eng) - 0.5, uniform(eng) - 0.5);
            v.coeffs[n] = cplx(uniform(eng) - 0.5, uniform(eng) - 0.5);
        }
        adj = std::max(adj, std::abs(overlap(raise(u), v) - overlap(u, lower(v))));
    }
    out.push_back(make_result("raise/lower adjointness on random vectors", adj, 1e-12));

    double diag = 0.0;
    for (double lam : {0.5, 2.5}) {
        const IrrepParams q(lam);
        for (int n = 0; n <= 30; ++n) {
            FockVector e = basis_state(n, q, 32);
            const double jpjm = overlap(e, raise(lower(e))).real();
            const double jmjp = overlap(e, lower(raise(e))).real();
            diag = std::max(diag, std::abs(jpjm - n * (n + lam - 0.5)));
            diag = std::max(diag, std::abs(jmjp - (n + 1.0) * (n + 1.0 + lam - 0.5)));
        }
    }
    out.push_back(make_result("J+J- / J-J+ diagonal values", diag, 1e-10));

    FockVector w(p, N);
    for (int n = 0; n <= N; ++n) w.coeffs[n] = cplx(uniform(eng) - 0.5, uniform(eng) - 0.5);
    const FockVector we = hamiltonian_phase(w, 0.731);
    double mag = 0.0;
    for (int n = 0; n <= N; ++n)
        mag = std::max(mag, std::abs(std::abs(we.coeffs[n]) - std::abs(w.coeffs[n])));
    out.push_back(make_result("hamiltonian_phase modulus preservation", mag, 1e-15));

    const FockVector two_step = raise_power(raise_power(w, 2), 3);
    const FockVector one_step = raise_power(w, 5);
    out.push_back(make_result("raise_power composition (2+3 = 5)",
                              coeff_distance(two_step, one_step), 1e-10));
    return out;
}

std::vector<CheckResult> verify_states(std::uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 eng(seed);

    double lim = 0.0;
    for (double lam : kGridLambda) {
        const IrrepParams p(lam);
        for (double r : {0.5, 1.0, 2.0}) {
            const cplx z = std::polar(r, 0.9);
            const FockVector a = nbgcs({Family::nbgcs, z, 0, p});
            const FockVector b = pabgcs({Family::pabgcs, z, 0, p});
            const FockVector c = make_state({Family::bgcs, z, 0, p});
            lim = std::max(lim, coeff_distance(a, b));
            lim = std::max(lim, coeff_distance(a, c));
        }
    }
    out.push_back(make_result("limit chain NBGCS(0) = PABGCS(0) = BGCS", lim, 1e-13));

    {
        const IrrepParams p(0.5);
        const FockVector em = pabgcs({Family::pabgcs, cplx(0.0), 3, p});
        const FockVector e3 = basis_state(3, p, em.cutoff());
        const FockVector e0 = nbgcs({Family::nbgcs, cplx(0.0), 2, p});
        const FockVector b0 = basis_state(0, p, e0.cutoff());
        out.push_back(make_result("vacuum limits PABGCS(z=0) = e_m, NBGCS(z=0) = e_0",
                                  std::max(coeff_distance(em, e3), coeff_distance(e0, b0)),
                                  0.0));
    }

    double support = 0.0;
    for (int m : {1, 3, 5}) {
        const FockVector v = pabgcs({Family::pabgcs, std::polar(1.5, 0.4), m, IrrepParams(0.5)});
        for (int n = 0; n < m; ++n) support = std::max(support, std::abs(v.coeffs[n]));
    }
    out.push_back(make_result("PABGCS support starts at n = m (exact zeros below)", support,
                              0.0));

    double diagram = 0.0;
    for (double lam : kGridLambda)
        for (int m : {0, 1, 2, 3})
            for (const cplx z : {cplx(1.0, 0.0), cplx(1.0, 0.5)}) {
                const StateSpec spec{Family::pabgcs, z, m, IrrepParams(lam)};
                diagram = std::max(diagram, coeff_distance_phase_aligned(
                                                pabgcs_from_diagram(spec), pabgcs(spec)));
            }
    out.push_back(make_result("construction-path equivalence (diagram vs direct)", diagram,
                              1e-10));

    double norm_dev = 0.0;
    for (double lam : kGridLambda)
        for (int m : kGridM)
            for (double r : kGridZ) {
                const FockVector v = nbgcs({Family::nbgcs, std::polar(r, 0.3), m,
                                            IrrepParams(lam)});
                norm_dev = std::max(norm_dev, std::abs(v.norm2() - 1.0) + v.tail_bound);
            }
    out.push_back(make_result("constructor norm within tail_tol", norm_dev, 2e-12));

    double ov = 0.0;
    {
        const IrrepParams p(0.5);
        for (int m1 : {0, 1, 2})
            for (int m2 : {0, 1, 3}) {
                const cplx z1 = std::polar(1.0, 0.0), z2 = std::polar(1.3, 1.1);
                const FockVector u = nbgcs({Family::nbgcs, z1, m1, p});
                const FockVector v = nbgcs({Family::nbgcs, z2, m2, p});
                ov = std::max(ov, std::abs(overlap(u, v) -
                                           nbgcs_overlap_closed(z1, m1, z2, m2, p)));
            }
        for (int m : {0, 2}) {
            const cplx z1(1.0, 0.0), z2(0.0, 1.0);
            const FockVector u = pabgcs({Family::pabgcs, z1, m, p});
            const FockVector v = pabgcs({Family::pabgcs, z2, m, p});
            ov = std::max(ov, std::abs(overlap(u, v) - pabgcs_overlap_closed(z1, z2, m, p)));
        }
        for (int mb : {0, 1, 2})
            for (int mk : {0, 1, 2}) {
                const cplx z = std::polar(1.2, 0.7);
                const FockVector u = pabgcs({Family::pabgcs, z, mb, p});
                const FockVector v = pabgcs({Family::pabgcs, z, mk, p});
                ov = std::max(ov, std::abs(overlap(u, v) -
                                           pabgcs_overlap_unequal(z, mb, mk, p)));
            }
    }
    out.push_back(make_result("closed-form overlaps vs Fock sums", ov, 1e-10));

    double bound = 0.0;
    for (int rep = 0; rep < 24; ++rep) {
        const cplx z1 = std::polar(4.0 * uniform(eng), 6.28 * uniform(eng));
        const cplx z2 = std::polar(4.0 * uniform(eng), 6.28 * uniform(eng));
        const int m1 = static_cast<int>(uniform(eng) * 5.0);
        const int m2 = static_cast<int>(uniform(eng) * 5.0);
        const double lam = uniform(eng) < 0.5 ? 0.5 : 2.5;
        bound = std::max(bound,
                         std::abs(nbgcs_overlap_closed(z1, m1, z2, m2, IrrepParams(lam))) - 1.0);
    }
    out.push_back(make_result("overlap bound |<z',m'|z,m>| <= 1", bound, 1e-12));

    double evo = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const double lam = uniform(eng) < 0.5 ? 0.5 : 2.5;
        const int m = static_cast<int>(uniform(eng) * 4.0);
        const cplx z = std::polar(0.25 + 3.0 * uniform(eng), 6.28 * uniform(eng));
        const double t = 4.0 * uniform(eng) - 2.0;
        evo = std::max(evo, evolve_check({Family::nbgcs, z, m, IrrepParams(lam)}, t));
    }
    out.push_back(make_result("temporal stability on 20 random draws", evo, 1e-11));

    return out;
}

std::vector<CheckResult> verify_observables() {
    std::vector<CheckResult> out;

    double worst_rel = 0.0;
    std::string worst_cell;
    double worst_uncert = 0.0;
    double qg = 0.0;
    double worst_q_nbgcs = -1e300, worst_q_pabgcs = -1e300;
    std::string q_cell_n, q_cell_p;
    std::ostringstream disc;

    // oracle states built beyond the 1e-9 comparison tolerance
    TruncationPolicy oracle_trunc;
    oracle_trunc.tail_tol = 1e-20;
    for (double lam : kGridLambda) {
        const IrrepParams p(lam);
        for (int m : kGridM)
            for (double r : kGridZ)
                for (double phi : kGridPhi)
                    for (const Family fam : {Family::nbgcs, Family::pabgcs}) {
                        const cplx z = std::polar(r, phi);
                        const FockVector v = make_state({fam, z, m, p}, oracle_trunc);
                        const ObservableReport oracle = expectation_suite(v);
                        const ObservableReport closed = fam == Family::nbgcs
                                                            ? nbgcs_closed_suite(z, m, p)
                                                            : pabgcs_closed_suite(z, m, p);
                        const CrossCheck cc = compare_reports(oracle, closed);
                        if (cc.max_rel > worst_rel) {
                            worst_rel = cc.max_rel;
                            std::ostringstream os;
                            os << to_string(fam) << " lam=" << lam << " m=" << m << " |z|=" << r
                               << " phi=" << phi;
                            worst_cell = os.str();
                        }
                        for (const FieldDeviation& d : cc.discrepancies())
                            disc << to_string(fam) << " " << d.field << " rel=" << d.rel << "; ";

                        qg = std::max(qg, std::abs(oracle.mandelQ -
                                                   oracle.expN * (oracle.g2 - 1.0)));
                        worst_uncert = std::max(
                            worst_uncert, 0.25 * oracle.expJ3 * oracle.expJ3 -
                                              oracle.varX1 * oracle.varX2);

                        if (fam == Family::nbgcs && oracle.mandelQ > worst_q_nbgcs) {
                            worst_q_nbgcs = oracle.mandelQ;
                            std::ostringstream os;
                            os << "lam=" << lam << " m=" << m << " |z|=" << r;
                            q_cell_n = os.str();
                        }
                        if (fam == Family::pabgcs && oracle.mandelQ > worst_q_pabgcs) {
                            worst_q_pabgcs = oracle.mandelQ;
                            std::ostringstream os;
                            os << "lam=" << lam << " m=" << m << " |z|=" << r;
                            q_cell_p = os.str();
                        }
                    }
    }
    out.push_back(make_result("closed forms vs direct-sum oracle (full grid)", worst_rel, 1e-9,
                              disc.str().empty() ? "worst at " + worst_cell
                                                 : "DISCREPANCIES: " + disc.str()));
    out.push_back(make_result("Q = <N>(g2 - 1) consistency", qg, 1e-12));
    out.push_back(make_result("uncertainty relation slack", worst_uncert, 1e-10));
    out.push_back(sign_claim("sub-Poissonian claim, deformed vacuum family (grid)",
                             worst_q_nbgcs, "worst Q at " + q_cell_n));
    out.push_back(sign_claim("sub-Poissonian claim, photon-added family (grid)",
                             worst_q_pabgcs, "worst Q at " + q_cell_p));

    double cov = 0.0;
    {
        const IrrepParams p(0.5);
        const double theta = 0.77;
        for (int m : {0, 2}) {
            const cplx z = std::polar(1.4, 0.35);
            const cplx zr = z * std::polar(1.0, theta);
            const ObservableReport a = nbgcs_closed_suite(z, m, p);
            const ObservableReport b = nbgcs_closed_suite(zr, m, p);
            cov = std::max({cov, std::abs(a.expN - b.expN), std::abs(a.expN2 - b.expN2),
                            std::abs(a.expJpJm - b.expJpJm), std::abs(a.expJ3 - b.expJ3),
                            std::abs(a.mandelQ - b.mandelQ), std::abs(a.g2 - b.g2)});
            cov = std::max(cov,
                           std::abs(b.expJp - a.expJp * std::polar(1.0, -theta)));
            cov = std::max(cov,
                           std::abs(b.expJp2 - a.expJp2 * std::polar(1.0, -2.0 * theta)));
        }
    }
    out.push_back(make_result("phase covariance under z -> z e^{i theta}", cov, 1e-12));

    double bg = 0.0;
    for (double lam : kGridLambda)
        for (double r : kGridZ) {
            const ObservableReport rep =
                expectation_suite(make_state({Family::bgcs, std::polar(r, 1.1), 0,
                                              IrrepParams(lam)}));
            bg = std::max({bg, std::abs(rep.varX1 - 0.5 * rep.expJ3),
                           std::abs(rep.varX2 - 0.5 * rep.expJ3), std::abs(rep.S1),
                           std::abs(rep.S2)});
        }
    out.push_back(make_result("displaced-vacuum squeezing identity varX = <J3>/2, S = 0", bg,
                              1e-10));

    double eig = 0.0;
    for (double lam : kGridLambda)
        for (int m : kGridM)
            for (double r : kGridZ)
                for (double phi : kGridPhi) {
                    const cplx z = std::polar(r, phi);
                    eig = std::max(eig, nbgcs_eigen_residual({Family::nbgcs, z, m,
                                                              IrrepParams(lam)}));
                    eig = std::max(eig, pabgcs_eigen_residual({Family::pabgcs, z, m,
                                                               IrrepParams(lam)}));
                }
    out.push_back(make_result("eigen-relation residuals (both families, grid)", eig, 1e-11));

    return out;
}

std::vector<CheckResult> verify_measures() {
    std::vector<CheckResult> out;

    double dev = 0.0;
    for (double lam : {0.5, 2.5, 4.5})
        for (int m = 0; m <= 5; ++m)
            for (int n = 0; n <= 50; ++n)
                dev = std::max(dev, std::abs(nbgcs_moment_check(n, m, IrrepParams(lam)).ratio -
                                             1.0));
    out.push_back(make_result("deformed-vacuum measure moment ratio = 1", dev, 1e-12));

    double spread = 0.0;
    std::ostringstream consts;
    for (double lam : {0.5, 2.5, 4.5})
        for (int m = 0; m <= 5; ++m) {
            const double c0 = pabgcs_moment_check(0, m, IrrepParams(lam)).ratio;
            for (int n = 1; n <= 50; ++n)
                spread = std::max(spread,
                                  std::abs(pabgcs_moment_check(n, m, IrrepParams(lam)).ratio -
                                           c0));
            if (lam == 0.5) consts << "m=" << m << ": " << c0 << "; ";
        }
    out.push_back(make_result("photon-added measure moment ratio constant in n", spread, 1e-12,
                              "constant " + consts.str()));

    double pos = 0.0;
    for (double x : {1e-3, 0.1, 1.0, 3.0, 6.0})
        for (double lam : {0.5, 2.5})
            pos = std::min(pos, measure_pointwise_m0(x, IrrepParams(lam)));
    out.push_back(make_result("pointwise m = 0 measure positivity", -pos, 0.0));

    const double ref = 2.0 / (4.0 * std::atan(1.0)) * bessel_i(0, 2.0) * bessel_k(0, 2.0);
    out.push_back(make_result("pointwise m = 0 value at lambda=1/2, x=1",
                              std::abs(measure_pointwise_m0(1.0, IrrepParams(0.5)) - ref),
                              1e-12));

    const bool warn_ok = !nbgcs_moment_check(0, 0, IrrepParams(0.5)).lambda_warning &&
                         !nbgcs_moment_check(0, 0, IrrepParams(2.5)).lambda_warning &&
                         nbgcs_moment_check(0, 0, IrrepParams(1.5)).lambda_warning;
    out.push_back(make_result("lambda-family warning flag", warn_ok ? 0.0 : 1.0, 0.5));

    return out;
}

std::vector<CheckResult> verify_position() {
    std::vector<CheckResult> out;

    double ortho = 0.0;
    for (double lam : kGridLambda) {
        const IrrepParams p(lam);
        const PositionGrid grid = PositionGrid::gauss_laguerre(36, p);
        for (int n = 0; n <= 20; ++n)
            for (int np = n; np <= 20; ++np) {
                const double val = orthonormality_check(n, np, p, grid);
                ortho = std::max(ortho, std::abs(val - (n == np ? 1.0 : 0.0)));
            }
    }
    out.push_back(make_result("eigenfunction orthonormality (n,n' <= 20)", ortho, 1e-8));

    double pars = 0.0;
    for (double lam : kGridLambda)
        for (int m : {0, 2})
            for (double r : {0.5, 1.0, 2.0}) {
                const FockVector v = nbgcs({Family::nbgcs, std::polar(r, 0.6), m,
                                            IrrepParams(lam)});
                pars = std::max(pars, std::abs(parseval_check(v, PositionGrid::for_vector(v)) -
                                               v.norm2()));
            }
    out.push_back(make_result("Parseval via quadrature", pars, 1e-7));

    double closed = 0.0;
    {
        const IrrepParams p(0.5);
        TruncationPolicy tight;  // Fock-series pointwise error ~ sqrt(tail_tol)
        tight.tail_tol = 1e-20;
        for (double r : {0.5, 1.0, 2.0}) {
            const cplx z(r, 0.0);
            const FockVector v = nbgcs({Family::nbgcs, z, 0, p}, tight);
            for (double x : {0.5, 1.0, 2.0})
                closed = std::max(closed, std::abs(std::abs(bgcs_wavefunction_closed(x, z, p)) -
                                                   std::abs(wavefunction(x, v))));
        }
    }
    out.push_back(make_result("closed-form m = 0 wavefunction magnitude", closed, 1e-8));

    int sign_defect = 0;
    for (double lam : kGridLambda) {
        const IrrepParams p(lam);
        for (int n = 0; n <= 10; ++n) {
            int changes = 0;
            double prev = eigenfunction(1e-3, n, p);
            for (int k = 1; k <= 4000; ++k) {
                const double x = 12.0 * k / 4000.0;
                const double cur = eigenfunction(x, n, p);
                if (prev * cur < 0.0) ++changes;
                if (cur != 0.0) prev = cur;
            }
            if (changes != n) ++sign_defect;
        }
    }
    out.push_back(make_result("Sturm sign-change count (n <= 10)", sign_defect, 0.5));

    return out;
}

std::vector<CheckResult> verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "algebra") return verify_algebra();
    if (name == "states") return verify_states(seed);
    if (name == "observables") return verify_observables();
    if (name == "measures") return verify_measures();
    if (name == "position") return verify_position();
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const char* n : {"algebra", "states", "observables", "measures", "position"}) {
            auto part = verify_suite(n, seed);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown verify suite: " + name);
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace su11
