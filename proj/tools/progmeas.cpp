// Copyright 2026 The progmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "progmeas/cli.hpp"
#include "progmeas/errors.hpp"

namespace {

using namespace progmeas;

void add_common(CLI::App *cmd, cli::CommonOptions &common) {
    cmd->add_option("--config", common.config_path, "JSON experiment configuration")->check(CLI::ExistingFile);
    cmd->add_option("--seed", common.seed, "master seed (overrides the config file)");
    cmd->add_option("--pairs", common.pairs, "generated photon pairs per input setting")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--ideal", common.ideal, "start from the ideal apparatus (unit efficiency, no darks, M0 = 1)");
}

std::string joined(int argc, char **argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        out += (i ? " " : "") + std::string(argv[i]);
    }
    return out;
}

void report(const Dataset &dataset, const std::string &path) {
    std::cout << "wrote " << dataset.size() << " rows to " << path << " (+ " << Dataset::sidecar_path(path).string()
              << ")\n";
    const auto &errors = dataset.metadata().value("point_errors", nlohmann::json::array());
    if (!errors.empty()) {
        std::cerr << errors.size() << " point(s) reported estimator errors; see the sidecar\n";
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulator for a programmable unambiguous discriminator and a phase-covariant multimeter"};
    app.require_subcommand(1);
    const std::string command_line = joined(argc, argv);

    cli::DiscriminateOptions disc;
    std::string disc_out;
    std::string epsilon_list;
    auto *discriminate = app.add_subcommand("discriminate", "success probability sweep over ellipse angles");
    add_common(discriminate, disc.common);
    discriminate->add_option("--epsilon", epsilon_list, "comma-separated ellipticity angles, degrees")
        ->default_str("0,12,24,36");
    discriminate->add_option("--theta-range", disc.theta_range, "start:stop:step, degrees")->capture_default_str();
    discriminate->add_option("--out", disc_out, "output table path")->required();

    cli::MultimeterOptions mm;
    std::string mm_out;
    auto *multimeter = app.add_subcommand("multimeter", "inconclusive rate and fidelity over the phase grid");
    add_common(multimeter, mm.common);
    multimeter->add_option("--phi-range", mm.phi_range, "start:stop:step, degrees")->capture_default_str();
    multimeter->add_option("--eta", mm.eta, "POVM parameter in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    multimeter->add_option("--program-copies", mm.program_copies, "number of program qubits (only 1 supported)")
        ->capture_default_str();
    multimeter->add_option("--out", mm_out, "output table path")->required();

    cli::HomScanOptions hom;
    std::string hom_out;
    std::string position_list;
    auto *hom_scan = app.add_subcommand("hom-scan", "coincidence rates versus mirror position");
    add_common(hom_scan, hom.common);
    auto *positions_opt = hom_scan->add_option("--positions", position_list, "comma-separated positions, um");
    hom_scan->add_option("--range", hom.range, "start:stop:step, um")->capture_default_str()->excludes(positions_opt);
    hom_scan->add_option("--out", hom_out, "output table path")->required();

    cli::AnalyzeOptions an;
    std::string an_out;
    auto *analyze = app.add_subcommand("analyze", "recompute estimators from a table of raw counts");
    analyze->add_option("--in", an.input, "table with c_pp..sh_mm columns")->required()->check(CLI::ExistingFile);
    analyze->add_option("--out", an_out, "output table path (default: print to stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*discriminate) {
            disc.common.command_line = command_line;
            if (!epsilon_list.empty()) {
                disc.epsilons = cli::parse_list(epsilon_list);
            }
            const auto dataset = cli::cmd_discriminate(disc);
            dataset.save(disc_out);
            report(dataset, disc_out);
        } else if (*multimeter) {
            mm.common.command_line = command_line;
            const auto dataset = cli::cmd_multimeter(mm);
            dataset.save(mm_out);
            report(dataset, mm_out);
        } else if (*hom_scan) {
            hom.common.command_line = command_line;
            if (!position_list.empty()) {
                hom.positions = cli::parse_list(position_list);
            }
            const auto dataset = cli::cmd_hom_scan(hom);
            dataset.save(hom_out);
            report(dataset, hom_out);
            const auto &v = dataset.metadata()["visibility"];
            std::cout << "fitted visibility: " << (v.is_null() ? std::string("n/a (too few positions)") : v.dump())
                      << '\n';
        } else if (*analyze) {
            an.command_line = command_line;
            const auto dataset = cli::cmd_analyze(an);
            if (an_out.empty()) {
                dataset.write_table(std::cout);
            } else {
                dataset.save(an_out);
                report(dataset, an_out);
            }
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
