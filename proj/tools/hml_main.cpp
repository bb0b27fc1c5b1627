// hml: experiment runner for the Hardy-Mellin laboratory.
//
//   hml list
//   hml run <name> [--n N] [--xmin X] [--xmax X] [--seed S] [--out PATH] [--csv DIR]
//
// Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage/config error.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "hml/error.hpp"
#include "hml/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Hardy-Mellin operator laboratory"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list available experiments");

    hml::ExperimentConfig cfg;
    std::size_t n_opt = 0;
    double xmin_opt = 0.0, xmax_opt = 0.0;
    auto* run_cmd = app.add_subcommand("run", "run one experiment and report pass/fail");
    run_cmd->add_option("name", cfg.experiment, "experiment name")->required();
    auto* n_flag = run_cmd->add_option("--n", n_opt, "grid size override (power of two)");
    auto* xmin_flag = run_cmd->add_option("--xmin", xmin_opt, "log-window left endpoint");
    auto* xmax_flag = run_cmd->add_option("--xmax", xmax_opt, "log-window right endpoint");
    run_cmd->add_option("--seed", cfg.seed, "RNG seed for randomized probes");
    run_cmd->add_option("--out", cfg.out_path, "write the JSON report to this path");
    run_cmd->add_option("--csv", cfg.csv_dir, "dump plot curves (CSV) into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : hml::list_experiments()) std::cout << name << '\n';
            return 0;
        }
        if (n_flag->count()) cfg.n = n_opt;
        if (xmin_flag->count()) cfg.x_min = xmin_opt;
        if (xmax_flag->count()) cfg.x_max = xmax_opt;

        const hml::ExperimentReport rep = hml::run_experiment(cfg);
        for (const auto& a : rep.assertions) {
            std::printf("[%s] %s: measured %.6g in [%.6g, %.6g]\n", a.pass ? "PASS" : "FAIL",
                        a.name.c_str(), a.measured, a.lo, a.hi);
        }
        if (cfg.out_path.empty()) std::cout << rep.to_json().dump(2) << '\n';
        return rep.pass ? 0 : 1;
    } catch (const hml::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const std::string& k = e.kind();
        return (k == "unknown-experiment" || k == "config-invalid" || k == "invalid-size" ||
                k == "invalid-range")
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
