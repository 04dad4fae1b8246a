#ifndef SU11_SWEEP_HPP
#define SU11_SWEEP_HPP

#include <vector>

#include "su11/observables.hpp"
#include "su11/types.hpp"

namespace su11 {

/// Grid-sweep execution policy. The parallel path distributes
/// (m, point) cells over OpenMP threads; every cell is pure and writes
/// only its own slot, so both paths produce identical results and the
/// serial path doubles as the reference implementation in tests and in
/// the benchmark.
enum class Exec { serial, parallel };

struct SweepSpec {
    Family family = Family::nbgcs;
    double lambda = 0.5;
    double phase = 0.0;       // arg z, radians
    std::vector<int> ms{0, 1, 2, 3, 4, 5};
    double z_min = 0.0;       // grid is the half-open interval (z_min, z_max]
    double z_max = 6.0;
    int points = 240;
    double tail_tol = 1e-16;

    void validate() const;
    /// k-th abscissa, k = 1..points: z_min + k (z_max - z_min)/points.
    double z_at(int k) const { return z_min + (z_max - z_min) * k / points; }
};

struct SweepTable {
    std::vector<double> z_abs;                          // points
    std::vector<std::vector<ObservableReport>> rows;    // [m-index][point]
};

/// Build the state and run the direct-sum moment suite at every grid
/// cell.
SweepTable observable_sweep(const SweepSpec& spec, Exec exec = Exec::parallel);

/// m = 0 measure density on the same grid (the one pointwise-computable
/// curve).
std::vector<double> measure_sweep_m0(const SweepSpec& spec, Exec exec = Exec::parallel);

}  // namespace su11

#endif
