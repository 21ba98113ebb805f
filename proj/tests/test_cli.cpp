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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "oracle_values.hpp"
#include "progmeas/cli.hpp"
#include "progmeas/errors.hpp"
#include "progmeas/multimeter.hpp"

namespace progmeas::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "progmeas_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(const std::string &args) {
    const std::string command = std::string(PROGMEAS_EXE) + " " + args + " > " + scratch("stdout.txt").string() +
                                " 2> " + scratch("stderr.txt").string();
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

CommonOptions ideal_common(double pairs) {
    CommonOptions c;
    c.ideal = true;
    c.pairs = pairs;
    return c;
}

TEST(ParseRange, InclusiveGrid) {
    const auto thetas = parse_range("0:90:4");
    ASSERT_EQ(thetas.size(), 23u);
    EXPECT_EQ(thetas.front(), 0.0);
    EXPECT_EQ(thetas.back(), 88.0);
    EXPECT_EQ(parse_range("45:45:1"), std::vector<double>{45.0});
    const auto phis = parse_range("-90:90:8");
    EXPECT_EQ(phis.size(), 23u);
    EXPECT_EQ(phis.back(), 86.0);
    EXPECT_EQ(parse_range("0:1:0.1").size(), 11u);
}

TEST(ParseRange, Errors) {
    EXPECT_THROW(parse_range("0:90"), InvalidArgument);
    EXPECT_THROW(parse_range("0:90:0"), InvalidArgument);
    EXPECT_THROW(parse_range("10:0:1"), InvalidArgument);
    EXPECT_THROW(parse_range("a:b:c"), InvalidArgument);
    EXPECT_EQ(parse_list("0,12,24,36"), (std::vector<double>{0, 12, 24, 36}));
    EXPECT_THROW(parse_list(""), InvalidArgument);
    EXPECT_THROW(parse_list("1,,2"), InvalidArgument);
}

TEST(Discriminate, DefaultGridShape) {
    DiscriminateOptions o;
    o.common.pairs = 1e3;
    const auto d = cmd_discriminate(o);
    EXPECT_EQ(d.size(), 4u * 23u);
    EXPECT_EQ(d.metadata()["command"], "discriminate");
    EXPECT_TRUE(d.metadata().contains("timestamp"));
}

TEST(Discriminate, SinglePoint) {
    DiscriminateOptions o;
    o.common = ideal_common(1e4);
    o.epsilons = {0.0};
    o.theta_range = "45:45:1";
    const auto d = cmd_discriminate(o);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_DOUBLE_EQ(d.at(0, "p_theory"), 0.5);
}

TEST(Discriminate, IdealRunTracksCurve) {
    DiscriminateOptions o;
    o.common = ideal_common(1e6);
    o.epsilons = {0.0};
    const auto d = cmd_discriminate(o);
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_NEAR(d.at(i, "p_estimated"), d.at(i, "p_theory"), 3.5 * d.at(i, "p_std_error") + 1e-12);
    }
}

TEST(Multimeter, EtaTradeOff) {
    MultimeterOptions o;
    o.common = ideal_common(1e5);
    o.phi_range = "-90:90:60";
    o.eta = 0.5;
    const auto d = cmd_multimeter(o);
    ASSERT_EQ(d.size(), 4u);
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_NEAR(d.at(i, "fidelity"), oracle::kFidelityAtQuarter, 4.0 * d.at(i, "fidelity_std_error"));
        EXPECT_NEAR(d.at(i, "p_inconclusive"), 0.25, 4.0 * d.at(i, "p_inconclusive_std_error"));
        EXPECT_DOUBLE_EQ(d.at(i, "fidelity_theory"), fidelity_from_PI(0.25));
    }
    o.program_copies = 3;
    EXPECT_THROW(cmd_multimeter(o), UnsupportedFeature);
}

TEST(HomScan, ShoulderOnly) {
    HomScanOptions o;
    o.positions = std::vector<double>{150.0};
    const auto d = cmd_hom_scan(o);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_TRUE(d.metadata()["visibility"].is_null());
    const ExperimentConfig config;
    const double quarter = config.pair_rate * config.detector_efficiency * config.detector_efficiency / 4.0;
    EXPECT_NEAR(d.at(0, "rate_pp"), quarter, 4.0 * std::sqrt(quarter / 10.0));
}

TEST(HomScan, DefaultRangeCentersDip) {
    HomScanOptions o;
    const auto d = cmd_hom_scan(o);
    EXPECT_EQ(d.size(), 41u);
    EXPECT_NEAR(d.metadata()["fit_mp"]["center"].get<double>(), 0.0, 5.0);
}

TEST(Analyze, ArithmeticExamples) {
    const auto path = scratch("counts.csv");
    std::ofstream(path) << "c_pp,c_pm,c_mp,c_mm,sh_pp,sh_pm,sh_mp,sh_mm\n"
                           "400,0,0,380,250,250,250,250\n"
                           "0,0,0,0,250,250,250,250\n";
    const auto d = cmd_analyze({path, ""});
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d.at(0, "p_succ"), 0.39, 1e-12);
    EXPECT_EQ(d.at(0, "error_rate"), 0.0);
    EXPECT_NEAR(d.at(1, "p_inconclusive"), 1.0, 1e-12);
    EXPECT_TRUE(std::isnan(d.at(1, "error_rate")));
    EXPECT_TRUE(std::isnan(d.at(1, "fidelity")));
}

TEST(Analyze, MissingColumnIsSchemaError) {
    const auto path = scratch("partial.csv");
    std::ofstream(path) << "c_pp,c_pm,c_mp,c_mm,sh_pp,sh_pm,sh_mp\n1,2,3,4,5,6,7\n";
    try {
        cmd_analyze({path, ""});
        FAIL();
    } catch (const SchemaError &e) {
        EXPECT_NE(std::string(e.what()).find("sh_mm"), std::string::npos);
    }
}

TEST(Analyze, RoundTripReproducesEstimates) {
    DiscriminateOptions o;
    o.common.pairs = 1e4;
    o.epsilons = {12.0, 36.0};
    o.theta_range = "0:88:22";
    const auto raw = cmd_discriminate(o);
    const auto path = scratch("raw.csv");
    raw.save(path);
    const auto analyzed = cmd_analyze({path, ""});
    ASSERT_EQ(analyzed.size(), raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        EXPECT_EQ(analyzed.at(i, "epsilon"), raw.at(i, "epsilon"));
        EXPECT_EQ(analyzed.at(i, "p_succ"), raw.at(i, "p_estimated"));
        EXPECT_EQ(analyzed.at(i, "p_succ_std_error"), raw.at(i, "p_std_error"));
        EXPECT_EQ(analyzed.at(i, "error_rate"), raw.at(i, "error_rate"));
        EXPECT_EQ(analyzed.at(i, "error_rate_std_error"), raw.at(i, "error_rate_std_error"));
    }
}

TEST(Executable, RerunIsByteIdentical) {
    const auto a = scratch("a.csv");
    const auto b = scratch("b.csv");
    const std::string args = " discriminate --epsilon 0,24 --theta-range 0:88:8 --pairs 20000 --seed 5 --out ";
    ASSERT_EQ(run(args + a.string()), 0);
    ASSERT_EQ(run(args + b.string()), 0);
    EXPECT_EQ(slurp(a), slurp(b));
    auto meta_a = nlohmann::json::parse(slurp(Dataset::sidecar_path(a)));
    auto meta_b = nlohmann::json::parse(slurp(Dataset::sidecar_path(b)));
    meta_a.erase("timestamp");
    meta_b.erase("timestamp");
    meta_a.erase("command_line");
    meta_b.erase("command_line");
    EXPECT_EQ(meta_a, meta_b);
    const auto c = scratch("c.csv");
    ASSERT_EQ(run(" discriminate --epsilon 0,24 --theta-range 0:88:8 --pairs 20000 --seed 6 --out " + c.string()), 0);
    EXPECT_NE(slurp(a), slurp(c));
}

TEST(Executable, AllCommandsRun) {
    EXPECT_EQ(run(" multimeter --ideal --eta 0 --phi-range -90:90:45 --pairs 10000 --out " +
                  scratch("m.csv").string()),
              0);
    EXPECT_EQ(run(" hom-scan --positions -150,0,150 --out " + scratch("h.csv").string()), 0);
    ASSERT_EQ(run(" discriminate --epsilon 24 --theta-range 20:20:1 --out " + scratch("d.csv").string()), 0);
    EXPECT_EQ(run(" analyze --in " + scratch("d.csv").string()), 0);
    EXPECT_NE(slurp(scratch("stdout.txt")).find("p_succ"), std::string::npos);
}

TEST(Executable, ReportsErrors) {
    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"detector_efficency": 0.5})";
    EXPECT_NE(run(" discriminate --config " + bad.string() + " --out " + scratch("x.csv").string()), 0);
    EXPECT_NE(slurp(scratch("stderr.txt")).find("detector_efficency"), std::string::npos);
    EXPECT_NE(run(" discriminate --theta-range 9:0:1 --out " + scratch("x.csv").string()), 0);
    const auto partial = scratch("partial2.csv");
    std::ofstream(partial) << "c_pp\n1\n";
    EXPECT_NE(run(" analyze --in " + partial.string()), 0);
    EXPECT_NE(slurp(scratch("stderr.txt")).find("c_pm"), std::string::npos);
    EXPECT_NE(run(" frobnicate"), 0);
}

}  // namespace
}  // namespace progmeas::cli
