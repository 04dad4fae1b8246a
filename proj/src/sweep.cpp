#include "su11/sweep.hpp"

#include <stdexcept>

#include "su11/measures.hpp"
#include "su11/states.hpp"

namespace su11 {

void SweepSpec::validate() const {
    if (points < 2 || points > 100000)
        throw std::invalid_argument("SweepSpec: points must lie in [2, 1e5]");
    if (z_min < 0.0 || z_max <= z_min)
        throw std::invalid_argument("SweepSpec: need 0 <= z_min < z_max");
    if (phase < 0.0 || phase >= 8.0 * std::atan(1.0))
        throw std::invalid_argument("SweepSpec: phase must lie in [0, 2*pi)");
    for (int m : ms)
        if (m < 0) throw std::invalid_argument("SweepSpec: m must be >= 0");
    IrrepParams check(lambda);  // validates lambda
    (void)check;
}

namespace {

ObservableReport sweep_cell(const SweepSpec& spec, int m, double r) {
    const IrrepParams p(spec.lambda);
    StateSpec st{spec.family, std::polar(r, spec.phase), m, p};
    if (st.family == Family::bgcs) st.m = 0;
    TruncationPolicy trunc;
    trunc.tail_tol = spec.tail_tol;
    return expectation_suite(make_state(st, trunc));
}

}  // namespace

SweepTable observable_sweep(const SweepSpec& spec, Exec exec) {
    spec.validate();
    SweepTable table;
    table.z_abs.resize(spec.points);
    for (int k = 1; k <= spec.points; ++k) table.z_abs[k - 1] = spec.z_at(k);
    table.rows.assign(spec.ms.size(), std::vector<ObservableReport>(spec.points));

    const int n_ms = static_cast<int>(spec.ms.size());
    const long total = static_cast<long>(n_ms) * spec.points;

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long idx = 0; idx < total; ++idx) {
            const int mi = static_cast<int>(idx / spec.points);
            const int k = static_cast<int>(idx % spec.points);
            table.rows[mi][k] = sweep_cell(spec, spec.ms[mi], table.z_abs[k]);
        }
    } else {
        for (long idx = 0; idx < total; ++idx) {
            const int mi = static_cast<int>(idx / spec.points);
            const int k = static_cast<int>(idx % spec.points);
            table.rows[mi][k] = sweep_cell(spec, spec.ms[mi], table.z_abs[k]);
        }
    }
    return table;
}

std::vector<double> measure_sweep_m0(const SweepSpec& spec, Exec exec) {
    spec.validate();
    const IrrepParams p(spec.lambda);
    std::vector<double> out(spec.points);
    // the density diverges logarithmically at the origin; clip the grid
    const double floor_x = 1e-3;

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int k = 1; k <= spec.points; ++k)
            out[k - 1] = measure_pointwise_m0(std::max(spec.z_at(k), floor_x), p);
    } else {
        for (int k = 1; k <= spec.points; ++k)
            out[k - 1] = measure_pointwise_m0(std::max(spec.z_at(k), floor_x), p);
    }
    return out;
}

}  // namespace su11
