#include "su11/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "su11/position.hpp"
#include "su11/states.hpp"

namespace su11 {

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

namespace {

void write_header(std::ostream& os, const std::string& family, int m_max, double lambda,
                  double phase) {
    os << "# su11-coherent v1; family=" << family << "; m=" << m_max
       << "; lambda=" << format_cell(lambda) << "; phase=" << format_cell(phase) << "\n";
}

}  // namespace

FigureData make_figure(int id, const SweepSpec& spec, Exec exec) {
    if (id < 1 || id > 5) throw std::invalid_argument("figure id must lie in 1..5");
    FigureData fig;
    fig.id = id;
    fig.spec = spec;

    if (id == 1) {
        for (int m : spec.ms)
            if (m != 0)
                throw std::invalid_argument(
                    "figure 1 with m >= 1 is out of scope (Mellin-verified only)");
        SweepSpec s = spec;
        s.ms = {0};
        fig.spec = s;
        fig.z_abs.resize(s.points);
        for (int k = 1; k <= s.points; ++k) fig.z_abs[k - 1] = s.z_at(k);
        fig.columns.push_back(measure_sweep_m0(s, exec));
        fig.column_names.push_back("K_m0");
        return fig;
    }

    SweepSpec s = spec;
    s.family = (id == 2 || id == 3) ? Family::nbgcs : Family::pabgcs;
    fig.spec = s;
    const SweepTable table = observable_sweep(s, exec);
    fig.z_abs = table.z_abs;
    const bool mandel = (id == 2 || id == 4);
    for (size_t mi = 0; mi < s.ms.size(); ++mi) {
        std::vector<double> col(table.z_abs.size());
        for (size_t k = 0; k < col.size(); ++k)
            col[k] = mandel ? table.rows[mi][k].mandelQ : table.rows[mi][k].S1;
        fig.columns.push_back(std::move(col));
        fig.column_names.push_back((mandel ? "Q_m" : "S1_m") + std::to_string(s.ms[mi]));
    }
    return fig;
}

void write_figure_csv(std::ostream& os, const FigureData& fig) {
    const int m_max = fig.spec.ms.empty() ? 0 : *std::max_element(fig.spec.ms.begin(),
                                                                  fig.spec.ms.end());
    write_header(os, fig.id == 1 ? "measure" : to_string(fig.spec.family), m_max,
                 fig.spec.lambda, fig.spec.phase);
    os << "z_abs";
    for (const std::string& name : fig.column_names) os << "," << name;
    os << "\n";
    for (size_t k = 0; k < fig.z_abs.size(); ++k) {
        os << format_cell(fig.z_abs[k]);
        for (const auto& col : fig.columns) os << "," << format_cell(col[k]);
        os << "\n";
    }
}

void write_figure_svg(std::ostream& os, const FigureData& fig) {
    const double W = 720, H = 480, ml = 70, mr = 150, mt = 30, mb = 50;
    const double pw = W - ml - mr, ph = H - mt - mb;

    double ymin = 0.0, ymax = 0.0;
    for (const auto& col : fig.columns)
        for (double v : col) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    const double xmin = fig.spec.z_min, xmax = fig.spec.z_max;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
       << "\" stroke=\"black\"/>\n";
    if (ymin < 0.0 && ymax > 0.0)
        os << "<line x1=\"" << ml << "\" y1=\"" << py(0.0) << "\" x2=\"" << ml + pw
           << "\" y2=\"" << py(0.0) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    char lab[64];
    std::snprintf(lab, sizeof(lab), "%.3g", ymin);
    os << "<text x=\"8\" y=\"" << py(ymin) << "\" font-size=\"12\">" << lab << "</text>\n";
    std::snprintf(lab, sizeof(lab), "%.3g", ymax);
    os << "<text x=\"8\" y=\"" << py(ymax) + 10 << "\" font-size=\"12\">" << lab << "</text>\n";
    std::snprintf(lab, sizeof(lab), "%.3g", xmax);
    os << "<text x=\"" << ml + pw - 10 << "\" y=\"" << H - 20 << "\" font-size=\"12\">" << lab
       << "</text>\n";
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << H - 8
       << "\" font-size=\"13\">|z|</text>\n";

    for (size_t c = 0; c < fig.columns.size(); ++c) {
        os << "<polyline fill=\"none\" stroke=\"" << palette[c % 6]
           << "\" stroke-width=\"1.5\" points=\"";
        for (size_t k = 0; k < fig.z_abs.size(); ++k) {
            os << px(fig.z_abs[k]) << "," << py(fig.columns[c][k]);
            if (k + 1 < fig.z_abs.size()) os << " ";
        }
        os << "\"/>\n";
        os << "<text x=\"" << ml + pw + 12 << "\" y=\"" << mt + 18 + 18 * c
           << "\" font-size=\"13\" fill=\"" << palette[c % 6] << "\">" << fig.column_names[c]
           << "</text>\n";
    }
    os << "</svg>\n";
}

void write_state_csv(std::ostream& os, const StateSpec& spec, const FockVector& v) {
    write_header(os, to_string(spec.family), spec.m, spec.params.lambda, std::arg(spec.z));
    os << "n,re,im,prob\n";
    for (int n = 0; n <= v.cutoff(); ++n) {
        const cplx c = v.coeffs[static_cast<size_t>(n)];
        os << n << "," << format_cell(c.real()) << "," << format_cell(c.imag()) << ","
           << format_cell(std::norm(c)) << "\n";
    }
}

void write_observables_csv(std::ostream& os, const SweepSpec& spec, const SweepTable& table,
                           int m) {
    write_header(os, to_string(spec.family), m, spec.lambda, spec.phase);
    os << "z_abs,expN,expN2,re_expJp,im_expJp,expJpJm,expJ3,varX1,varX2,g2,mandelQ,S1,S2\n";
    size_t mi = 0;
    for (size_t i = 0; i < spec.ms.size(); ++i)
        if (spec.ms[i] == m) mi = i;
    for (size_t k = 0; k < table.z_abs.size(); ++k) {
        const ObservableReport& r = table.rows[mi][k];
        os << format_cell(table.z_abs[k]) << "," << format_cell(r.expN) << ","
           << format_cell(r.expN2) << "," << format_cell(r.expJp.real()) << ","
           << format_cell(r.expJp.imag()) << "," << format_cell(r.expJpJm) << ","
           << format_cell(r.expJ3) << "," << format_cell(r.varX1) << ","
           << format_cell(r.varX2) << "," << format_cell(r.g2) << ","
           << format_cell(r.mandelQ) << "," << format_cell(r.S1) << "," << format_cell(r.S2)
           << "\n";
    }
}

void write_wavefunction_csv(std::ostream& os, const StateSpec& spec, const FockVector& v,
                            double x_max, int points) {
    if (points < 2 || x_max <= 0.0)
        throw std::invalid_argument("wavefunction dump: need points >= 2 and x_max > 0");
    write_header(os, to_string(spec.family), spec.m, spec.params.lambda, std::arg(spec.z));
    os << "x,re,im,abs2\n";
    for (int k = 1; k <= points; ++k) {
        const double x = x_max * k / points;
        const cplx psi = wavefunction(x, v);
        os << format_cell(x) << "," << format_cell(psi.real()) << ","
           << format_cell(psi.imag()) << "," << format_cell(std::norm(psi)) << "\n";
    }
}

}  // namespace su11
