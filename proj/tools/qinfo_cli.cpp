// qinfo command-line front end.
//
//   qinfo sweep  --theta <rad> [--phi <rad>] [--lt-min --lt-max --steps]
//                [--skip-mef] [--out <path>]     CSV sweep over lambda_t
//   qinfo figure <id>                            presets 1a..1d, 2a..2d
//   qinfo verify [--seed <n>]                    run the verification suites
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "qinfo/qinfo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitIo = 3;

int write_sweep(const qinfo::SweepConfig& cfg, const std::string& out_path,
                const CLI::App& usage) {
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n" << usage.help();
        return kExitUsage;
    }
    if (out_path.empty() || out_path == "-") {
        qinfo::write_csv(std::cout, cfg);
        return std::cout ? kExitOk : kExitIo;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    qinfo::write_csv(os, cfg);
    os.flush();
    if (!os) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement and channel-information metrics for a dephasing qubit model"};
    app.require_subcommand(1);

    // sweep
    qinfo::SweepConfig cfg;
    std::string out_path;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep lambda_t and emit CSV rows");
    sweep->add_option("--theta", cfg.theta, "entanglement angle in radians, [0, pi]")
        ->required();
    sweep->add_option("--phi", cfg.phi, "initial-state phase in radians (default 0)");
    sweep->add_option("--lt-min", cfg.lt_min, "grid start (default 0)");
    sweep->add_option("--lt-max", cfg.lt_max, "grid end (default 2*pi)");
    sweep->add_option("--steps", cfg.steps, "grid points, endpoints included (default 201)");
    sweep->add_flag("--skip-mef", cfg.skip_mef,
                    "skip the MEF optimization; mef/fano columns become nan");
    sweep->add_option("--out", out_path, "output path (default: standard output)");

    // figure
    std::string figure_id;
    std::string figure_out;
    bool figure_skip_mef = false;
    CLI::App* figure = app.add_subcommand(
        "figure",
        "Write the preset sweep fig<id>.csv (panels a-d: theta = pi/4, pi/3, pi/2, 3pi/4; "
        "families 1 and 2 highlight different columns but share the same CSV)");
    figure->add_option("id", figure_id, "panel id: 1a..1d or 2a..2d")->required();
    figure->add_option("--out", figure_out, "override the output path");
    figure->add_flag("--skip-mef", figure_skip_mef,
                     "skip the MEF optimization; mef/fano columns become nan");

    // verify
    std::uint64_t seed = 20250613;
    CLI::App* verify = app.add_subcommand("verify", "Run every verification suite");
    verify->add_option("--seed", seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) return write_sweep(cfg, out_path, *sweep);

        if (figure->parsed()) {
            qinfo::SweepConfig fig_cfg;
            try {
                fig_cfg.theta = qinfo::figure_theta(figure_id);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n" << figure->help();
                return kExitUsage;
            }
            fig_cfg.skip_mef = figure_skip_mef;
            const std::string path =
                figure_out.empty() ? qinfo::figure_filename(figure_id) : figure_out;
            return write_sweep(fig_cfg, path, *figure);
        }

        // verify
        const auto results = qinfo::run_all_suites(seed);
        const bool ok = qinfo::print_report(std::cout, results, seed);
        return ok ? kExitOk : kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
