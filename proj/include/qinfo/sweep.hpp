// Parameter sweeps over lambda_t and their CSV serialization.
//
// The CSV contract is deliberately rigid: fixed header, fixed column order,
// 12 significant digits, '\n' line endings, no trailing separator. Identical
// flags must produce byte-identical files.

#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qinfo/dephasing.hpp"

namespace qinfo {

struct SweepConfig {
    double theta = 0.0;
    double phi = 0.0;
    double lt_min = 0.0;
    double lt_max = 2.0 * std::numbers::pi;
    int steps = 201;
    bool skip_mef = false;

    void validate() const {
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw std::invalid_argument("sweep: theta must be in [0, pi]");
        if (!std::isfinite(phi)) throw std::invalid_argument("sweep: phi must be finite");
        if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
        if (!(lt_min < lt_max)) throw std::invalid_argument("sweep: need lt_min < lt_max");
    }
};

/// Uniform grid over [lt_min, lt_max], inclusive of both endpoints.
inline std::vector<double> sweep_grid(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<double> grid(static_cast<std::size_t>(cfg.steps));
    for (int i = 0; i < cfg.steps; ++i)
        grid[static_cast<std::size_t>(i)] =
            cfg.lt_min + static_cast<double>(i) * (cfg.lt_max - cfg.lt_min) /
                             static_cast<double>(cfg.steps - 1);
    grid.back() = cfg.lt_max;
    return grid;
}

/// Evaluate every grid point, in grid order.
inline std::vector<ModelPoint> run_sweep(const SweepConfig& cfg) {
    const std::vector<double> grid = sweep_grid(cfg);
    std::vector<ModelPoint> rows;
    rows.reserve(grid.size());
    for (double lt : grid)
        rows.push_back(evaluate_point({cfg.theta, cfg.phi, lt}, !cfg.skip_mef));
    return rows;
}

inline std::string csv_header() {
    return "lambda_t,theta,phi,concurrence,entropy_exchange,coherent_information,"
           "mef,fano_lhs,fano_slack";
}

namespace detail {

inline std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace detail

/// One CSV row; the metric columns carry the numeric-route values.
inline std::string csv_row(const ModelPoint& pt) {
    std::string row;
    const double cols[9] = {pt.params.lambda_t, pt.params.theta,   pt.params.phi,
                            pt.concurrence_numeric, pt.se_numeric, pt.ie_numeric,
                            pt.mef_numeric,         pt.fano_lhs,   pt.fano_slack};
    for (int i = 0; i < 9; ++i) {
        if (i > 0) row += ',';
        row += detail::format_g12(cols[i]);
    }
    return row;
}

/// Full sweep to CSV (header plus one row per grid point).
inline void write_csv(std::ostream& os, const SweepConfig& cfg) {
    os << csv_header() << '\n';
    for (const ModelPoint& pt : run_sweep(cfg)) os << csv_row(pt) << '\n';
}

/// Figure presets: panels a-d of both figure families sweep
/// theta = pi/4, pi/3, pi/2, 3pi/4 over the default grid.
inline double figure_theta(std::string_view id) {
    if (id.size() == 2 && (id[0] == '1' || id[0] == '2')) {
        switch (id[1]) {
            case 'a': return std::numbers::pi / 4.0;
            case 'b': return std::numbers::pi / 3.0;
            case 'c': return std::numbers::pi / 2.0;
            case 'd': return 3.0 * std::numbers::pi / 4.0;
            default: break;
        }
    }
    throw std::invalid_argument("unknown figure id (expected one of 1a..1d, 2a..2d)");
}

inline std::string figure_filename(std::string_view id) {
    return "fig" + std::string(id) + ".csv";
}

}  // namespace qinfo
