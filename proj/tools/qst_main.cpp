// qst — CLI for the coupled-cavity state-transfer simulator.
//
// Subcommands: run <config>, reproduce <id> [--outdir], sweep <spec>,
// validate <config>. Exit codes: 0 ok, 1 configuration error, 2 numerical
// failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "qst/run.hpp"

namespace {

int guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const qst::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum state transfer in a three-cavity chain with end qubits "
                 "and an optional Kerr medium"};
    app.require_subcommand(1);

    std::string config_path, output_override;
    auto* run_cmd = app.add_subcommand("run", "Integrate one configuration and write a CSV");
    run_cmd->add_option("config", config_path, "configuration file")->required();
    run_cmd->add_option("-o,--output", output_override, "override output.path");

    std::string preset_id, outdir = ".";
    auto* rep_cmd = app.add_subcommand("reproduce", "Run a bundled parameter-study preset");
    rep_cmd->add_option("id", preset_id, "preset id (3a, 3b, 4, 5, 6, 7a-7d, 8a, 8b)")
        ->required();
    rep_cmd->add_option("--outdir", outdir, "output directory (default .)");

    std::string sweep_path, sweep_output = "sweep.csv";
    int jobs = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write a summary CSV");
    sweep_cmd->add_option("spec", sweep_path, "sweep specification file")->required();
    sweep_cmd->add_option("-o,--output", sweep_output, "summary path (default sweep.csv)");
    sweep_cmd->add_option("-j,--jobs", jobs, "concurrent runs (default 1)")
        ->check(CLI::PositiveNumber);

    std::string validate_path;
    auto* val_cmd = app.add_subcommand("validate", "Check a configuration and echo it");
    val_cmd->add_option("config", validate_path, "configuration file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) {
        return guarded([&] {
            qst::RunConfig c = qst::load_config(qst::read_text_file(config_path));
            if (!output_override.empty()) c.output_path = output_override;
            qst::run(c);
            std::cout << "wrote " << c.output_path << "\n";
        });
    }
    if (rep_cmd->parsed()) {
        return guarded([&] {
            for (const auto& path : qst::reproduce(preset_id, outdir))
                std::cout << "wrote " << path << "\n";
        });
    }
    if (sweep_cmd->parsed()) {
        return guarded([&] {
            const qst::SweepSpec spec = qst::load_sweep(qst::read_text_file(sweep_path));
            qst::sweep(spec, jobs, sweep_output);
            std::cout << "wrote " << sweep_output << "\n";
        });
    }
    if (val_cmd->parsed()) {
        return guarded([&] {
            const qst::RunConfig c = qst::load_config(qst::read_text_file(validate_path));
            std::cout << qst::echo_config(c);
        });
    }
    return 0;
}
