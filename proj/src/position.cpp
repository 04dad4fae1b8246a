#include "su11/position.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "su11/special_functions.hpp"

namespace su11 {

namespace {

// Orthonormal generalized-Laguerre values lt_0..lt_n at u, weight
// u^alpha e^{-u}:  sqrt((k+1)(k+1+alpha)) lt_{k+1} =
// (2k+1+alpha-u) lt_k - sqrt(k(k+alpha)) lt_{k-1}.
void laguerre_orthonormal(double u, double alpha, int n, std::vector<double>& out) {
    out.resize(static_cast<size_t>(n) + 1);
    double prev = 0.0;
    double cur = std::exp(-0.5 * std::lgamma(alpha + 1.0));
    out[0] = cur;
    for (int k = 0; k < n; ++k) {
        const double next =
            ((2.0 * k + 1.0 + alpha - u) * cur - std::sqrt(k * (k + alpha)) * prev) /
            std::sqrt((k + 1.0) * (k + 1.0 + alpha));
        prev = cur;
        cur = next;
        out[static_cast<size_t>(k) + 1] = cur;
    }
}

}  // namespace

namespace {

// value and u-derivative of the orthonormal Laguerre p_K by recurrence
void laguerre_orthonormal_deriv(double u, double alpha, int K, double& val, double& der) {
    double p_prev = 0.0, d_prev = 0.0;
    double p_cur = std::exp(-0.5 * std::lgamma(alpha + 1.0)), d_cur = 0.0;
    for (int k = 0; k < K; ++k) {
        const double c = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
        const double b = std::sqrt(k * (k + alpha));
        const double p_next = ((2.0 * k + 1.0 + alpha - u) * p_cur - b * p_prev) / c;
        const double d_next = ((2.0 * k + 1.0 + alpha - u) * d_cur - p_cur - b * d_prev) / c;
        p_prev = p_cur;
        d_prev = d_cur;
        p_cur = p_next;
        d_cur = d_next;
    }
    val = p_cur;
    der = d_cur;
}

}  // namespace

PositionGrid PositionGrid::gauss_laguerre(int nodes, const IrrepParams& p) {
    if (nodes < 2) throw std::invalid_argument("PositionGrid: need at least 2 nodes");
    const double alpha = p.alpha();

    // eigenvalues of the Jacobi matrix seed the nodes; Newton polishing
    // against the orthonormal recurrence pins each root to full
    // precision, and the Christoffel function 1/sum_k p_k^2 gives the
    // weight at the same relative accuracy as the polynomial values
    // (eigenvector-based weights lose all digits where they underflow)
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(nodes, nodes);
    for (int k = 0; k < nodes; ++k) {
        J(k, k) = 2.0 * k + alpha + 1.0;
        if (k > 0) {
            const double b = std::sqrt(k * (k + alpha));
            J(k, k - 1) = b;
            J(k - 1, k) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("PositionGrid: eigensolver failed");

    PositionGrid g;
    g.alpha = alpha;
    g.u.resize(nodes);
    g.x.resize(nodes);
    g.w.resize(nodes);
    std::vector<double> pk;
    for (int i = 0; i < nodes; ++i) {
        double u = es.eigenvalues()(i);
        for (int it = 0; it < 8; ++it) {
            double val, der;
            laguerre_orthonormal_deriv(u, alpha, nodes, val, der);
            if (der == 0.0) break;
            const double step = val / der;
            u -= step;
            if (std::abs(step) <= 1e-15 * std::max(u, 1.0)) break;
        }
        g.u[i] = u;
        g.x[i] = std::sqrt(u);
        laguerre_orthonormal(u, alpha, nodes - 1, pk);
        double chr = 0.0;
        for (double v : pk) chr += v * v;
        g.w[i] = 1.0 / chr;
    }
    return g;
}

PositionGrid PositionGrid::for_vector(const FockVector& v) {
    return gauss_laguerre(v.cutoff() + 8, v.params);
}

double eigenfunction(double x, int n, const IrrepParams& p) {
    if (!(x > 0.0)) throw std::invalid_argument("eigenfunction: x must be > 0");
    if (n < 0) throw std::invalid_argument("eigenfunction: n must be >= 0");
    const double u = x * x;
    std::vector<double> lt;
    laguerre_orthonormal(u, p.alpha(), n, lt);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sqrt(2.0) * std::pow(x, p.lambda) * std::exp(-0.5 * u) * lt.back();
}

double orthonormality_check(int n, int n_prime, const IrrepParams& p, const PositionGrid& grid) {
    if (n < 0 || n_prime < 0) throw std::invalid_argument("orthonormality_check: bad indices");
    if (std::abs(p.alpha() - grid.alpha) > 1e-14)
        throw std::invalid_argument("orthonormality_check: grid built for a different lambda");
    const int need = std::max(n, n_prime);
    if (static_cast<int>(grid.u.size()) <= need)
        throw std::invalid_argument("orthonormality_check: grid too coarse for these indices");
    const double sign = ((n + n_prime) % 2 == 0) ? 1.0 : -1.0;
    double acc = 0.0;
    std::vector<double> lt;
    for (size_t i = 0; i < grid.u.size(); ++i) {
        laguerre_orthonormal(grid.u[i], grid.alpha, need, lt);
        acc += grid.w[i] * lt[static_cast<size_t>(n)] * lt[static_cast<size_t>(n_prime)];
    }
    return sign * acc;
}

cplx wavefunction(double x, const FockVector& v) {
    if (!(x > 0.0)) throw std::invalid_argument("wavefunction: x must be > 0");
    const double u = x * x;
    std::vector<double> lt;
    laguerre_orthonormal(u, v.params.alpha(), v.cutoff(), lt);
    cplx acc(0.0, 0.0);
    double sign = 1.0;
    for (int n = 0; n <= v.cutoff(); ++n, sign = -sign)
        acc += v.coeffs[static_cast<size_t>(n)] * sign * lt[static_cast<size_t>(n)];
    return std::sqrt(2.0) * std::pow(x, v.params.lambda) * std::exp(-0.5 * u) * acc;
}

double parseval_check(const FockVector& v, const PositionGrid& grid) {
    const int N = v.cutoff();
    double acc = 0.0;
    std::vector<double> lt;
    for (size_t i = 0; i < grid.u.size(); ++i) {
        laguerre_orthonormal(grid.u[i], grid.alpha, N, lt);
        cplx s(0.0, 0.0);
        double sign = 1.0;
        for (int n = 0; n <= N; ++n, sign = -sign)
            s += v.coeffs[static_cast<size_t>(n)] * sign * lt[static_cast<size_t>(n)];
        acc += grid.w[i] * std::norm(s);
    }
    return acc;
}

cplx bgcs_wavefunction_closed(double x, cplx z, const IrrepParams& p) {
    if (!(x > 0.0)) throw std::invalid_argument("bgcs_wavefunction_closed: x must be > 0");
    if (std::abs(z) == 0.0) return cplx(eigenfunction(x, 0, p), 0.0);

    const double l = p.lambda;
    const double nu = l - 0.5;
    // J_nu(2 i x sqrt(z)) through its 0F1 form: argument -w^2/4 = x^2 z
    const cplx arg = cplx(x * x) * z;
    const cplx series = pfq(HypergeometricParams({}, {nu + 1.0}), arg).value;
    const cplx i_unit(0.0, 1.0);
    const cplx half_w = i_unit * x * std::sqrt(z);  // principal branch
    const cplx bessel_j = std::pow(half_w, nu) / std::exp(std::lgamma(nu + 1.0)) * series;

    const cplx branch = std::pow(-z / std::abs(z), 0.25 - 0.5 * l);
    const double denom = std::sqrt(bessel_i(nu, 2.0 * std::abs(z)));
    return std::sqrt(2.0 * x) * branch * bessel_j * std::exp(-z - cplx(0.5 * x * x)) / denom;
}

}  // namespace su11
