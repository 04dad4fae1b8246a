#ifndef SU11_IO_HPP
#define SU11_IO_HPP

#include <map>
#include <ostream>
#include <string>

#include "su11/sweep.hpp"
#include "su11/types.hpp"

namespace su11 {

/// One numeric CSV cell: 17 significant digits, round-trip safe.
std::string format_cell(double v);

/// Flat key=value configuration file (blank lines and '#' comments
/// allowed). Returned map feeds defaults; command-line flags override.
std::map<std::string, std::string> parse_config_file(const std::string& path);

struct FigureData {
    int id = 2;
    SweepSpec spec;
    std::vector<double> z_abs;
    std::vector<std::vector<double>> columns;  // one per m
    std::vector<std::string> column_names;
};

/// Assemble figure data (2/4: Mandel Q; 3/5: S1; 1: m = 0 measure).
FigureData make_figure(int id, const SweepSpec& spec, Exec exec = Exec::parallel);

void write_figure_csv(std::ostream& os, const FigureData& fig);
void write_figure_svg(std::ostream& os, const FigureData& fig);

void write_state_csv(std::ostream& os, const StateSpec& spec, const FockVector& v);

/// Sweep of the full observable report; one row per |z|.
void write_observables_csv(std::ostream& os, const SweepSpec& spec, const SweepTable& table,
                           int m);

void write_wavefunction_csv(std::ostream& os, const StateSpec& spec, const FockVector& v,
                            double x_max, int points);

}  // namespace su11

#endif
