// Acceptance suite: one pass/fail line per criterion, every tolerance
// pinned in code. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "su11/algebra.hpp"
#include "su11/io.hpp"
#include "su11/measures.hpp"
#include "su11/nonlinear.hpp"
#include "su11/observables.hpp"
#include "su11/position.hpp"
#include "su11/states.hpp"
#include "su11/sweep.hpp"

using namespace su11;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

double uniform(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

const double kPi = 4.0 * std::atan(1.0);

void criterion_1() {
    Timer timer;
    double worst = 0.0;
    for (double lam : {0.5, 2.5, 4.5})
        worst = std::max(worst, verify_commutators(64, IrrepParams(lam)));
    const double t = timer.seconds();
    std::ostringstream d;
    d << "max residual " << worst << ", " << t << " s";
    report(1, worst <= 1e-12 && t < 1.0, "algebra commutator residuals <= 1e-12", d.str());
}

void criterion_2() {
    Timer timer;
    double worst = 0.0;
    for (int m = 0; m <= 3; ++m)
        for (const cplx z : {cplx(1.0, 0.0), cplx(1.0, 1.0)})
            for (double lam : {0.5, 2.5})
                worst = std::max(worst, shift_identity_check(m, z, IrrepParams(lam), 64));
    const double t = timer.seconds();
    std::ostringstream d;
    d << "max deviation " << worst << ", " << t << " s";
    report(2, worst <= 1e-10 && t < 5.0, "displacement shift identities <= 1e-10", d.str());
}

struct GridCell {
    Family fam;
    double lam, r, phi;
    int m;
    ObservableReport oracle;
    ObservableReport closed;
};

std::vector<GridCell> criterion_grid() {
    // the direct-sum oracle must be built beyond the 1e-9 comparison
    // tolerance: n^2-weighted moments lose ~tail_tol * n^2 to truncation
    TruncationPolicy oracle_trunc;
    oracle_trunc.tail_tol = 1e-20;
    std::vector<GridCell> cells;
    for (double lam : {0.5, 2.5})
        for (int m = 0; m <= 5; ++m)
            for (double r : {0.25, 0.5, 1.0, 2.0, 4.0})
                for (double phi : {0.0, kPi / 3.0})
                    for (Family fam : {Family::nbgcs, Family::pabgcs}) {
                        GridCell c;
                        c.fam = fam;
                        c.lam = lam;
                        c.m = m;
                        c.r = r;
                        c.phi = phi;
                        const IrrepParams p(lam);
                        const cplx z = std::polar(r, phi);
                        c.oracle = expectation_suite(make_state({fam, z, m, p}, oracle_trunc));
                        c.closed = fam == Family::nbgcs ? nbgcs_closed_suite(z, m, p)
                                                        : pabgcs_closed_suite(z, m, p);
                        cells.push_back(c);
                    }
    return cells;
}

void criterion_3(const std::vector<GridCell>& cells, double grid_seconds) {
    double worst = 0.0;
    std::string disc;
    for (const GridCell& c : cells) {
        const CrossCheck cc = compare_reports(c.oracle, c.closed);
        worst = std::max(worst, cc.max_rel);
        for (const FieldDeviation& f : cc.discrepancies())
            disc += f.field + std::string(" ");
    }
    std::ostringstream d;
    d << "max relative deviation " << worst << ", " << grid_seconds << " s";
    if (!disc.empty()) d << "; formula discrepancies: " << disc;
    report(3, worst <= 1e-9 && disc.empty() && grid_seconds < 30.0,
           "closed forms equal the direct-sum oracle <= 1e-9 on the full grid", d.str());
}

void criterion_4() {
    SweepSpec s;
    s.lambda = 0.5;
    s.points = 240;

    bool pass = true;
    std::ostringstream d;
    for (Family fam : {Family::nbgcs, Family::pabgcs}) {
        s.family = fam;
        s.phase = 0.0;
        const SweepTable t = observable_sweep(s);
        for (size_t mi = 0; mi < s.ms.size(); ++mi) {
            double worst = -1e300;
            int first_bad = -1;
            for (size_t k = 0; k < t.z_abs.size(); ++k) {
                const double q = t.rows[mi][k].mandelQ;
                if (q >= 0.0 && first_bad < 0) first_bad = static_cast<int>(k);
                worst = std::max(worst, q);
            }
            if (first_bad >= 0) {
                pass = false;
                d << to_string(fam) << " m=" << s.ms[mi] << ": Q>=0 from |z|="
                  << t.z_abs[first_bad] << " (max Q " << worst << "); ";
            }
        }
    }

    const ObservableReport spot =
        expectation_suite(make_state({Family::bgcs, cplx(1.0), 0, IrrepParams(0.5)}));
    const double spot_err = std::abs(spot.mandelQ - (-0.264648));
    if (spot_err > 1e-6) {
        pass = false;
        d << "spot Q(" << spot.mandelQ << ") off by " << spot_err << "; ";
    } else {
        d << "spot Q = " << spot.mandelQ << " within 1e-6";
    }
    report(4, pass, "figures 2/4: Mandel Q < 0 at all 240 samples, both families", d.str());
}

void criterion_5() {
    bool pass = true;
    std::ostringstream d;

    SweepSpec s;
    s.lambda = 0.5;
    s.points = 240;

    // NBGCS at phi = pi/3, PABGCS at phi = 0
    for (Family fam : {Family::nbgcs, Family::pabgcs}) {
        s.family = fam;
        s.phase = fam == Family::nbgcs ? kPi / 3.0 : 0.0;
        const SweepTable t = observable_sweep(s);

        double worst_m0 = 0.0;
        for (size_t k = 0; k < t.z_abs.size(); ++k)
            worst_m0 = std::max(worst_m0, std::abs(t.rows[0][k].S1));
        if (worst_m0 > 1e-10) {
            pass = false;
            d << to_string(fam) << " m=0 S1 not identically 0 (max |S1| " << worst_m0 << "); ";
        }

        for (size_t mi = 1; mi < s.ms.size(); ++mi) {
            int first_bad = -1;
            double worst = -1e300;
            for (size_t k = 0; k < t.z_abs.size(); ++k) {
                const double v = t.rows[mi][k].S1;
                if (v >= 0.0 && first_bad < 0) first_bad = static_cast<int>(k);
                worst = std::max(worst, v);
            }
            if (first_bad >= 0) {
                pass = false;
                d << to_string(fam) << " m=" << s.ms[mi] << ": S1>=0 up to |z|~"
                  << t.z_abs[first_bad] << " (max S1 " << worst << "); ";
            }
        }

        // monotone deepening of S1 in m at |z| in {1, 2, 3}
        for (double r : {1.0, 2.0, 3.0}) {
            const IrrepParams p(0.5);
            double prev = 1e300;
            bool mono = true;
            for (int m = 1; m <= 5; ++m) {
                const ObservableReport rep = expectation_suite(
                    make_state({fam, std::polar(r, s.phase), m, p}));
                if (rep.S1 >= prev) mono = false;
                prev = rep.S1;
            }
            if (!mono) {
                pass = false;
                d << to_string(fam) << " |z|=" << r << ": S1 not monotone in m; ";
            }
        }
    }
    report(5, pass, "figures 3/5: S1 < 0 (m >= 1), m = 0 flat, deepening in m", d.str());
}

void criterion_6(const std::vector<GridCell>& cells) {
    double worst = -1e300;
    for (const GridCell& c : cells)
        worst = std::max(worst, 0.25 * c.oracle.expJ3 * c.oracle.expJ3 -
                                    c.oracle.varX1 * c.oracle.varX2);
    std::ostringstream d;
    d << "max violation " << worst;
    report(6, worst <= 1e-10, "uncertainty relation varX1 varX2 >= |<J3>|^2/4 - 1e-10",
           d.str());
}

void criterion_7() {
    Timer timer;
    double dev = 0.0;
    for (double lam : {0.5, 2.5, 4.5})
        for (int m = 0; m <= 5; ++m)
            for (int n = 0; n <= 50; ++n)
                dev = std::max(dev,
                               std::abs(nbgcs_moment_check(n, m, IrrepParams(lam)).ratio - 1.0));

    double spread = 0.0;
    double constant = pabgcs_moment_check(0, 0, IrrepParams(0.5)).ratio;
    for (double lam : {0.5, 2.5, 4.5})
        for (int m = 0; m <= 5; ++m) {
            const double c0 = pabgcs_moment_check(0, m, IrrepParams(lam)).ratio;
            for (int n = 1; n <= 50; ++n)
                spread = std::max(spread, std::abs(pabgcs_moment_check(n, m, IrrepParams(lam))
                                                       .ratio -
                                                   c0));
        }
    const double t = timer.seconds();
    std::ostringstream d;
    d << "deformed-vacuum ratio dev " << dev << "; photon-added constant = " << constant
      << " (spread " << spread << "), " << t << " s";
    report(7, dev <= 1e-12 && spread <= 1e-12 && t < 1.0,
           "resolution-of-identity Mellin moments", d.str());
}

void criterion_8() {
    std::mt19937_64 eng(20240915u);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const double lam = uniform(eng) < 0.5 ? 0.5 : 2.5;
        const int m = static_cast<int>(uniform(eng) * 4.0);
        const cplx z = std::polar(0.25 + 3.0 * uniform(eng), 2.0 * kPi * uniform(eng));
        const double t = 6.0 * uniform(eng) - 3.0;
        worst = std::max(worst, evolve_check({Family::nbgcs, z, m, IrrepParams(lam)}, t));
    }
    std::ostringstream d;
    d << "max deviation " << worst;
    report(8, worst <= 1e-11, "temporal stability on 20 random draws <= 1e-11", d.str());
}

void criterion_9() {
    double worst = 0.0;
    for (double lam : {0.5, 2.5})
        for (int m = 0; m <= 5; ++m)
            for (double r : {0.25, 0.5, 1.0, 2.0, 4.0})
                for (double phi : {0.0, kPi / 3.0}) {
                    const IrrepParams p(lam);
                    const cplx z = std::polar(r, phi);
                    worst = std::max(worst, nbgcs_eigen_residual({Family::nbgcs, z, m, p}));
                    worst = std::max(worst, pabgcs_eigen_residual({Family::pabgcs, z, m, p}));
                }
    std::ostringstream d;
    d << "max residual " << worst;
    report(9, worst <= 1e-11, "eigen-relations for both families <= 1e-11 on the grid",
           d.str());
}

void criterion_10() {
    double ortho = 0.0;
    for (double lam : {0.5, 2.5}) {
        const IrrepParams p(lam);
        const PositionGrid grid = PositionGrid::gauss_laguerre(36, p);
        for (int n = 0; n <= 20; ++n)
            for (int np = n; np <= 20; ++np)
                ortho = std::max(ortho, std::abs(orthonormality_check(n, np, p, grid) -
                                                 (n == np ? 1.0 : 0.0)));
    }

    double pars = 0.0;
    for (double lam : {0.5, 2.5})
        for (double r : {0.5, 1.0, 2.0}) {
            const FockVector v = nbgcs({Family::nbgcs, std::polar(r, 0.8), 2,
                                        IrrepParams(lam)});
            pars = std::max(pars,
                            std::abs(parseval_check(v, PositionGrid::for_vector(v)) -
                                     v.norm2()));
        }

    double closed = 0.0;
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

    std::ostringstream d;
    d << "orthonormality " << ortho << ", Parseval " << pars << ", closed-form magnitude "
      << closed;
    report(10, ortho <= 1e-8 && pars <= 1e-7 && closed <= 1e-8,
           "position representation: orthonormality, Parseval, closed form", d.str());
}

void criterion_11() {
    double worst = 0.0;
    for (double lam : {0.5, 2.5}) {
        const IrrepParams p(lam);
        for (double r : {0.5, 1.5}) {
            const cplx z = std::polar(r, 1.0);
            const FockVector nb = nbgcs({Family::nbgcs, z, 0, p});
            const FockVector pa = pabgcs({Family::pabgcs, z, 0, p});
            const FockVector bg = make_state({Family::bgcs, z, 0, p});
            const int N = std::max({nb.cutoff(), pa.cutoff(), bg.cutoff()});
            for (int n = 0; n <= N; ++n) {
                const cplx a = n <= nb.cutoff() ? nb.coeffs[n] : cplx(0.0);
                const cplx b = n <= pa.cutoff() ? pa.coeffs[n] : cplx(0.0);
                const cplx c = n <= bg.cutoff() ? bg.coeffs[n] : cplx(0.0);
                worst = std::max({worst, std::abs(a - b), std::abs(a - c)});
            }
        }
        for (int m : {1, 3}) {
            const FockVector em = pabgcs({Family::pabgcs, cplx(0.0), m, p});
            for (int n = 0; n <= em.cutoff(); ++n)
                worst = std::max(worst,
                                 std::abs(em.coeffs[n] - (n == m ? cplx(1.0) : cplx(0.0))));
        }
    }
    std::ostringstream d;
    d << "max coefficient deviation " << worst;
    report(11, worst <= 1e-13, "family limits coincide coefficientwise <= 1e-13", d.str());
}

void criterion_12() {
    SweepSpec s;
    s.family = Family::nbgcs;
    s.points = 60;
    s.phase = kPi / 3.0;
    auto render = [&](Exec e) {
        std::ostringstream os;
        write_figure_csv(os, make_figure(3, s, e));
        return os.str();
    };
    const std::string a = render(Exec::parallel);
    const std::string b = render(Exec::parallel);
    const std::string c = render(Exec::serial);
    const bool pass = a == b && a == c && !a.empty();
    report(12, pass, "figure CSV byte-identical across runs and execution policies",
           pass ? "serial and parallel renders agree" : "byte mismatch");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();

    Timer grid_timer;
    const std::vector<GridCell> cells = criterion_grid();
    const double grid_seconds = grid_timer.seconds();
    criterion_3(cells, grid_seconds);

    criterion_4();
    criterion_5();
    criterion_6(cells);
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
        std::printf(
            "note: the failing lines are universal sign claims; the direct-sum oracle "
            "refutes them near |z| -> 0 (see README.md)\n");
    }
    return g_failures;
}
