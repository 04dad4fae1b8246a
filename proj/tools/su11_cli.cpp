#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "su11/io.hpp"
#include "su11/states.hpp"
#include "su11/sweep.hpp"
#include "su11/verify.hpp"

namespace {

struct CommonOpts {
    std::string family = "NBGCS";
    int m = 0;
    double lambda = 0.5;
    double phase = 0.0;
    double z_min = 0.0;
    double z_max = 6.0;
    double z_abs = 1.0;
    int points = 240;
    std::string out;
    std::string format = "csv";
    double tail_tol = 1e-16;
    double x_max = 8.0;
    std::uint64_t seed = 20240915;
    std::string config;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--family", o.family, "BGCS | NBGCS | PABGCS");
    cmd->add_option("--m", o.m, "deformation / photon-addition order");
    cmd->add_option("--lambda", o.lambda, "representation label, > -1/2");
    cmd->add_option("--phase", o.phase, "arg z in [0, 2*pi)");
    cmd->add_option("--zmin", o.z_min, "sweep start (grid is half-open (zmin, zmax])");
    cmd->add_option("--zmax", o.z_max, "sweep end");
    cmd->add_option("--points", o.points, "grid points");
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--format", o.format, "csv | svg (svg additionally writes <out>.svg)");
    cmd->add_option("--tail-tol", o.tail_tol, "relative truncation tail tolerance");
    cmd->add_option("--zabs", o.z_abs, "|z| for single-state commands");
    cmd->add_option("--xmax", o.x_max, "wavefunction grid end");
    cmd->add_option("--seed", o.seed, "seed for randomized property suites");
    cmd->add_option("--config", o.config, "flat key=value config file (flags take precedence)");
}

// precedence: flags > config file > defaults
void apply_config(CLI::App* cmd, CommonOpts& o) {
    if (o.config.empty()) return;
    const auto kv = su11::parse_config_file(o.config);
    auto absent = [&](const char* flag) { return cmd->count(flag) == 0; };
    auto it = kv.end();
    if ((it = kv.find("family")) != kv.end() && absent("--family")) o.family = it->second;
    if ((it = kv.find("m")) != kv.end() && absent("--m")) o.m = std::stoi(it->second);
    if ((it = kv.find("lambda")) != kv.end() && absent("--lambda"))
        o.lambda = std::stod(it->second);
    if ((it = kv.find("phase")) != kv.end() && absent("--phase"))
        o.phase = std::stod(it->second);
    if ((it = kv.find("zmin")) != kv.end() && absent("--zmin")) o.z_min = std::stod(it->second);
    if ((it = kv.find("zmax")) != kv.end() && absent("--zmax")) o.z_max = std::stod(it->second);
    if ((it = kv.find("points")) != kv.end() && absent("--points"))
        o.points = std::stoi(it->second);
    if ((it = kv.find("out")) != kv.end() && absent("--out")) o.out = it->second;
    if ((it = kv.find("format")) != kv.end() && absent("--format")) o.format = it->second;
    if ((it = kv.find("tail-tol")) != kv.end() && absent("--tail-tol"))
        o.tail_tol = std::stod(it->second);
    if ((it = kv.find("zabs")) != kv.end() && absent("--zabs")) o.z_abs = std::stod(it->second);
    if ((it = kv.find("xmax")) != kv.end() && absent("--xmax")) o.x_max = std::stod(it->second);
    if ((it = kv.find("seed")) != kv.end() && absent("--seed"))
        o.seed = std::stoull(it->second);
}

// a setting counts as user-provided when it came from a flag or the file
bool given(CLI::App* cmd, const CommonOpts& o, const char* flag, const char* key) {
    if (cmd->count(flag) > 0) return true;
    if (o.config.empty()) return false;
    return su11::parse_config_file(o.config).count(key) > 0;
}

int write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    f << payload;
    return 0;
}

std::string swap_extension(const std::string& path, const std::string& ext) {
    const size_t dot = path.find_last_of('.');
    const size_t slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ext;
    return path.substr(0, dot) + ext;
}

su11::StateSpec make_spec(const CommonOpts& o) {
    const su11::Family fam = su11::family_from_string(o.family);
    return su11::StateSpec{fam, std::polar(o.z_abs, o.phase),
                           fam == su11::Family::bgcs ? 0 : o.m, su11::IrrepParams(o.lambda)};
}

su11::SweepSpec make_sweep(const CommonOpts& o) {
    su11::SweepSpec s;
    s.family = su11::family_from_string(o.family);
    s.lambda = o.lambda;
    s.phase = o.phase;
    s.z_min = o.z_min;
    s.z_max = o.z_max;
    s.points = o.points;
    s.tail_tol = o.tail_tol;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(1,1) Calogero-Sutherland coherent-state toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    int figure_id = 2;
    std::string verify_name = "all";

    CLI::App* c_state = app.add_subcommand("state", "dump state coefficients as CSV");
    add_common(c_state, o);
    CLI::App* c_figure = app.add_subcommand("figure", "regenerate figure data (ids 1-5)");
    c_figure->add_option("id", figure_id, "figure id")->required();
    add_common(c_figure, o);
    CLI::App* c_obs = app.add_subcommand("observables", "sweep the full observable report");
    add_common(c_obs, o);
    CLI::App* c_wave = app.add_subcommand("wavefunction", "dump psi(x) on a grid");
    add_common(c_wave, o);
    CLI::App* c_verify = app.add_subcommand("verify", "run structural-identity suites");
    c_verify->add_option("suite", verify_name,
                         "algebra | states | observables | measures | position | all");
    add_common(c_verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        apply_config(active, o);

        su11::TruncationPolicy trunc;
        trunc.tail_tol = o.tail_tol;

        if (c_state->parsed()) {
            const su11::StateSpec spec = make_spec(o);
            const su11::FockVector v = su11::make_state(spec, trunc);
            std::ostringstream os;
            su11::write_state_csv(os, spec, v);
            return write_out(o.out, os.str());
        }

        if (c_figure->parsed()) {
            su11::SweepSpec s = make_sweep(o);
            // figures carry one curve per order 0..m (figure 1: m = 0 only)
            const int m_top = given(c_figure, o, "--m", "m") ? o.m : (figure_id == 1 ? 0 : 5);
            s.ms.clear();
            for (int m = 0; m <= m_top; ++m) s.ms.push_back(m);
            if (figure_id == 3 && !given(c_figure, o, "--phase", "phase"))
                s.phase = 4.0 * std::atan(1.0) / 3.0;  // pi/3
            const su11::FigureData fig = su11::make_figure(figure_id, s);
            std::ostringstream os;
            su11::write_figure_csv(os, fig);
            int rc = write_out(o.out, os.str());
            if (rc == 0 && o.format == "svg") {
                std::ostringstream svg;
                su11::write_figure_svg(svg, fig);
                rc = write_out(o.out.empty() ? "" : swap_extension(o.out, ".svg"), svg.str());
            }
            return rc;
        }

        if (c_obs->parsed()) {
            su11::SweepSpec s = make_sweep(o);
            s.ms = {o.m};
            const su11::SweepTable table = su11::observable_sweep(s);
            std::ostringstream os;
            su11::write_observables_csv(os, s, table, o.m);
            return write_out(o.out, os.str());
        }

        if (c_wave->parsed()) {
            const su11::StateSpec spec = make_spec(o);
            const su11::FockVector v = su11::make_state(spec, trunc);
            std::ostringstream os;
            su11::write_wavefunction_csv(os, spec, v, o.x_max, o.points);
            return write_out(o.out, os.str());
        }

        if (c_verify->parsed()) {
            const auto results = su11::verify_suite(verify_name, o.seed);
            for (const su11::CheckResult& r : results) {
                std::printf("[%s] %-55s residual %.3e (tol %.1e)%s%s\n",
                            r.pass ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.threshold,
                            r.note.empty() ? "" : "  -- ", r.note.c_str());
            }
            return su11::all_pass(results) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
