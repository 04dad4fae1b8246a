#include <doctest.h>

#include <cmath>

#include "su11/algebra.hpp"
#include "su11/observables.hpp"
#include "su11/special_functions.hpp"
#include "su11/states.hpp"

using namespace su11;

TEST_CASE("vacuum report") {
    const IrrepParams p(0.5);
    const ObservableReport r = expectation_suite(basis_state(0, p, 8));
    CHECK(r.expN == 0.0);
    CHECK(r.expJ3 == doctest::Approx(0.5));
    CHECK(r.varX1 == doctest::Approx(0.25));
    CHECK(r.varX2 == doctest::Approx(0.25));
    CHECK(r.S1 == doctest::Approx(0.0));
    CHECK(r.S2 == doctest::Approx(0.0));
    CHECK(r.mandelQ == 0.0);
}

TEST_CASE("Fock state report") {
    const IrrepParams p(0.5);
    const ObservableReport r = expectation_suite(basis_state(3, p, 8));
    CHECK(r.expN == doctest::Approx(3.0));
    CHECK(r.expN2 == doctest::Approx(9.0));
    CHECK(r.mandelQ == doctest::Approx(-1.0));  // number states are maximally sub-Poissonian
    CHECK(r.expJpJm == doctest::Approx(3.0 * 3.0));
}

TEST_CASE("displaced-vacuum frozen values at z = 1, lambda = 1/2") {
    const IrrepParams p(0.5);
    const ObservableReport r =
        expectation_suite(make_state({Family::bgcs, cplx(1.0), 0, p}));
    const double i0 = bessel_i(0.0, 2.0), i1 = bessel_i(1.0, 2.0);
    CHECK(r.expN == doctest::Approx(i1 / i0).epsilon(1e-12));
    CHECK(r.expN == doctest::Approx(0.6977746579640080).epsilon(1e-12));
    CHECK(r.expN2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.mandelQ == doctest::Approx(-0.2646472312416962).epsilon(1e-10));
    CHECK(r.g2 == doctest::Approx(0.6207267945014033).epsilon(1e-10));
}

TEST_CASE("deformed-vacuum closed suite against the oracle") {
    const IrrepParams p(0.5);

    const ObservableReport at_zero = nbgcs_closed_suite(cplx(0.0), 2, p);
    CHECK(at_zero.expN == 0.0);
    CHECK(at_zero.expJp == cplx(0.0));
    CHECK(at_zero.expJ3 == doctest::Approx(0.5));

    const ObservableReport closed = nbgcs_closed_suite(cplx(1.0), 0, p);
    CHECK(closed.expN == doctest::Approx(0.6977746579640080).epsilon(1e-12));

    TruncationPolicy oracle_trunc;  // beyond the 1e-9 comparison tolerance
    oracle_trunc.tail_tol = 1e-20;
    for (double lam : {0.5, 2.5})
        for (int m : {0, 1, 3, 5})
            for (double r : {0.5, 2.0})
                for (double phi : {0.0, 1.0471975511965976}) {
                    const IrrepParams q(lam);
                    const cplx z = std::polar(r, phi);
                    const ObservableReport oracle =
                        expectation_suite(nbgcs({Family::nbgcs, z, m, q}, oracle_trunc));
                    const CrossCheck cc = compare_reports(oracle, nbgcs_closed_suite(z, m, q));
                    CHECK(cc.max_rel <= 1e-9);
                }
}

TEST_CASE("photon-added closed suite against the oracle") {
    const IrrepParams p(0.5);

    for (int m : {0, 1, 4}) {
        const ObservableReport r = pabgcs_closed_suite(cplx(0.0), m, p);
        CHECK(r.expN == doctest::Approx(static_cast<double>(m)));
    }

    {
        const cplx z(1.0);
        const ObservableReport oracle =
            expectation_suite(pabgcs({Family::pabgcs, z, 1, p}));
        const CrossCheck cc = compare_reports(oracle, pabgcs_closed_suite(z, 1, p));
        CHECK(cc.max_rel <= 1e-9);
    }

    TruncationPolicy oracle_trunc;
    oracle_trunc.tail_tol = 1e-20;
    for (double lam : {0.5, 2.5})
        for (int m : {0, 2, 5})
            for (double r : {0.25, 1.0, 4.0})
                for (double phi : {0.0, 1.0471975511965976}) {
                    const IrrepParams q(lam);
                    const cplx z = std::polar(r, phi);
                    const ObservableReport oracle = expectation_suite(
                        pabgcs({Family::pabgcs, z, m, q}, oracle_trunc));
                    const CrossCheck cc = compare_reports(oracle, pabgcs_closed_suite(z, m, q));
                    CHECK(cc.max_rel <= 1e-9);
                }
}

TEST_CASE("report internal consistency") {
    const IrrepParams p(2.5);
    const cplx z = std::polar(2.0, 0.9);
    const ObservableReport r = expectation_suite(nbgcs({Family::nbgcs, z, 3, p}));
    CHECK(std::abs(r.mandelQ - r.expN * (r.g2 - 1.0)) <= 1e-12);
    CHECK(r.expJm == std::conj(r.expJp));
    CHECK(r.expJm2 == std::conj(r.expJp2));
    CHECK(r.varX1 >= 0.0);
    CHECK(r.varX2 >= 0.0);
    CHECK(r.varX1 * r.varX2 >= 0.25 * r.expJ3 * r.expJ3 - 1e-10);
}

TEST_CASE("phase covariance") {
    const IrrepParams p(0.5);
    const double theta = 1.234;
    const cplx z = std::polar(1.5, 0.4);
    const ObservableReport a = nbgcs_closed_suite(z, 2, p);
    const ObservableReport b = nbgcs_closed_suite(z * std::polar(1.0, theta), 2, p);
    CHECK(std::abs(a.expN - b.expN) <= 1e-12);
    CHECK(std::abs(a.expN2 - b.expN2) <= 1e-12);
    CHECK(std::abs(a.expJpJm - b.expJpJm) <= 1e-12);
    CHECK(std::abs(a.expJ3 - b.expJ3) <= 1e-12);
    CHECK(std::abs(a.mandelQ - b.mandelQ) <= 1e-12);
    CHECK(std::abs(b.expJp - a.expJp * std::polar(1.0, -theta)) <= 1e-12);
    CHECK(std::abs(b.expJp2 - a.expJp2 * std::polar(1.0, -2.0 * theta)) <= 1e-12);
}

TEST_CASE("displaced vacuum is never squeezed") {
    for (double lam : {0.5, 2.5})
        for (double r : {0.3, 1.0, 4.0}) {
            const ObservableReport rep = expectation_suite(
                make_state({Family::bgcs, std::polar(r, 2.2), 0, IrrepParams(lam)}));
            CHECK(std::abs(rep.S1) <= 1e-10);
            CHECK(std::abs(rep.S2) <= 1e-10);
            CHECK(std::abs(rep.varX1 - 0.5 * rep.expJ3) <= 1e-10);
        }
}

TEST_CASE("discrepancy mechanism flags a doctored field") {
    const IrrepParams p(0.5);
    const ObservableReport a = nbgcs_closed_suite(cplx(1.0), 1, p);
    ObservableReport b = a;
    b.expJpJm *= 1.0 + 1e-4;
    const CrossCheck cc = compare_reports(a, b);
    const auto bad = cc.discrepancies();
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].field == "expJpJm");
    CHECK(compare_reports(a, a).discrepancies().empty());
}

TEST_CASE("small-z Mandel sign structure, both families") {
    // the low-|z| region is where the families differ qualitatively: the
    // photon-added family stays sub-Poissonian while the deformed vacuum
    // turns super-Poissonian for m >= 2 at lambda = 1/2
    const IrrepParams p(0.5);
    const ObservableReport nb2 =
        expectation_suite(nbgcs({Family::nbgcs, cplx(0.2), 2, p}));
    CHECK(nb2.mandelQ > 0.0);
    CHECK(nb2.mandelQ == doctest::Approx(5.262e-4).epsilon(2e-3));
    const ObservableReport nb1 =
        expectation_suite(nbgcs({Family::nbgcs, cplx(0.2), 1, p}));
    CHECK(nb1.mandelQ < 0.0);
    for (int m : {1, 2, 5})
        CHECK(expectation_suite(pabgcs({Family::pabgcs, cplx(0.2), m, p})).mandelQ < 0.0);
}
