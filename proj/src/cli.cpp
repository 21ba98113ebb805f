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

#include "progmeas/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <sstream>

#include "progmeas/config.hpp"
#include "progmeas/discriminator.hpp"
#include "progmeas/errors.hpp"
#include "progmeas/multimeter.hpp"

namespace progmeas::cli {

namespace {

double parse_double(const std::string &text, const std::string &what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception &) {
        throw InvalidArgument("invalid number '" + text + "' in " + what);
    }
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

void stamp(Dataset &dataset, const std::string &command, const std::string &command_line) {
    auto &meta = dataset.metadata();
    meta["command"] = command;
    meta["command_line"] = command_line;
    meta["timestamp"] = utc_timestamp();
}

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

template <typename F>
std::pair<double, double> try_estimate(F &&f) {
    try {
        const Estimate e = f();
        return {e.value, e.std_error};
    } catch (const Error &) {
        return {nan, nan};
    }
}

}  // namespace

std::vector<double> parse_range(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw InvalidArgument("range must be start:stop:step, got '" + text + "'");
    }
    const double start = parse_double(parts[0], "range");
    const double stop = parse_double(parts[1], "range");
    const double step = parse_double(parts[2], "range");
    if (!(step > 0.0)) {
        throw InvalidArgument("range step must be positive, got '" + text + "'");
    }
    if (stop < start) {
        throw InvalidArgument("range stop is below start in '" + text + "'");
    }
    std::vector<double> out;
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= n; ++k) {
        out.push_back(start + static_cast<double>(k) * step);
    }
    return out;
}

std::vector<double> parse_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ',')) {
        out.push_back(parse_double(part, "list"));
    }
    if (out.empty()) {
        throw InvalidArgument("empty list");
    }
    return out;
}

ExperimentConfig resolve_config(const CommonOptions &options) {
    ExperimentConfig config = options.ideal ? ExperimentConfig::ideal() : ExperimentConfig{};
    if (options.config_path) {
        config = load_config(*options.config_path, config);
    }
    if (options.seed) {
        config.seed = *options.seed;
    }
    if (options.pairs) {
        config.set_pairs_per_setting(*options.pairs);
    }
    config.validate();
    return config;
}

Dataset cmd_discriminate(const DiscriminateOptions &options) {
    const auto config = resolve_config(options.common);
    DiscriminatorGrid grid{options.epsilons, parse_range(options.theta_range)};
    auto dataset = run_full_experiment(grid, config);
    stamp(dataset, "discriminate", options.common.command_line);
    return dataset;
}

Dataset cmd_multimeter(const MultimeterOptions &options) {
    const auto config = resolve_config(options.common);
    MultimeterGrid grid{parse_range(options.phi_range), options.eta, options.program_copies};
    auto dataset = run_full_experiment(grid, config);
    stamp(dataset, "multimeter", options.common.command_line);
    return dataset;
}

Dataset cmd_hom_scan(const HomScanOptions &options) {
    const auto config = resolve_config(options.common);
    const auto positions = options.positions ? *options.positions : parse_range(options.range);
    const auto scan = hom_scan(positions, config);
    Dataset dataset({"position", "mode_overlap", "rate_pp", "rate_pm", "rate_mp", "rate_mm", "c_pp", "c_pm", "c_mp",
                     "c_mm"});
    for (const auto &row : scan.rows) {
        dataset.add_row({row.position, row.mode_overlap, row.rate_pp, row.rate_pm, row.rate_mp, row.rate_mm,
                         static_cast<double>(row.counts.c_pp), static_cast<double>(row.counts.c_pm),
                         static_cast<double>(row.counts.c_mp), static_cast<double>(row.counts.c_mm)});
    }
    auto &meta = dataset.metadata();
    meta["task"] = "hom_scan";
    meta["config"] = to_json(config);
    meta["seed"] = config.seed;
    auto fit_json = [](const std::optional<DipFit> &fit) -> nlohmann::json {
        if (!fit) {
            return nullptr;
        }
        return {{"baseline", fit->baseline}, {"visibility", fit->visibility}, {"center", fit->center},
                {"sigma", fit->sigma}};
    };
    meta["fit_pm"] = fit_json(scan.fit_pm);
    meta["fit_mp"] = fit_json(scan.fit_mp);
    if (const auto v = scan.visibility()) {
        meta["visibility"] = *v;
    } else {
        meta["visibility"] = nullptr;
    }
    stamp(dataset, "hom-scan", options.common.command_line);
    return dataset;
}

Dataset cmd_analyze(const AnalyzeOptions &options) {
    const auto input = Dataset::load(options.input);
    for (auto name : kCountColumns) {
        input.column_index(std::string(name));
    }
    std::vector<std::string> carried;
    for (const char *name : {"epsilon", "theta", "phi", "eta", "position"}) {
        if (input.has_column(name)) {
            carried.emplace_back(name);
        }
    }
    auto columns = carried;
    for (const char *name : {"p_succ", "p_succ_std_error", "p_inconclusive", "p_inconclusive_std_error", "error_rate",
                             "error_rate_std_error", "fidelity", "fidelity_std_error"}) {
        columns.emplace_back(name);
    }
    Dataset out(columns);
    for (std::size_t r = 0; r < input.size(); ++r) {
        CountRecord c;
        std::uint64_t *fields[] = {&c.c_pp, &c.c_pm, &c.c_mp, &c.c_mm, &c.sh_pp, &c.sh_pm, &c.sh_mp, &c.sh_mm};
        for (std::size_t k = 0; k < kCountColumns.size(); ++k) {
            const double v = input.at(r, std::string(kCountColumns[k]));
            if (!(v >= 0.0) || v != std::floor(v)) {
                throw SchemaError("row " + std::to_string(r + 1) + ", column '" + std::string(kCountColumns[k]) +
                                  "': counts must be nonnegative integers");
            }
            *fields[k] = static_cast<std::uint64_t>(v);
        }
        std::vector<double> row;
        for (const auto &name : carried) {
            row.push_back(input.at(r, name));
        }
        for (const auto &[value, err] : {try_estimate([&] { return estimate_success(c); }),
                                         try_estimate([&] { return estimate_PI(c); }),
                                         try_estimate([&] { return error_rate(c); }),
                                         try_estimate([&] { return estimate_fidelity(c); })}) {
            row.push_back(value);
            row.push_back(err);
        }
        out.add_row(std::move(row));
    }
    out.metadata()["task"] = "analyze";
    out.metadata()["input"] = options.input.string();
    stamp(out, "analyze", options.command_line);
    return out;
}

}  // namespace progmeas::cli
