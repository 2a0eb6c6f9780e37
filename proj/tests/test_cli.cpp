#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "harmonic/cli.hpp"

using namespace harmonic;
using harmonic::io::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("harmonic_cli_test_" + name);
}

class EnvGuard {
public:
    EnvGuard(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~EnvGuard() { ::unsetenv(name_); }

private:
    const char* name_;
};

}  // namespace

TEST(Cli, VerdictHardyJson) {
    const auto r = run_cli({"verdict", "hardy", "--space", "h3", "--a", "0.25", "--b", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["verdict"], "HeatKernelMultiple");
    EXPECT_EQ(j["cited_case"], "Thm 5.4(b)");
    EXPECT_EQ(j["operation"], "verdict hardy");
    EXPECT_EQ(j["config"]["space"], "h3");
    const auto v = io::verdict_from_json(j);
    EXPECT_EQ(v.outcome, Outcome::heat_kernel_multiple);
}

TEST(Cli, VerdictBeurlingCarriesKTypes) {
    const auto r = run_cli({"verdict", "beurling", "--space", "h3", "--d", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto v = io::verdict_from_json(json::parse(r.out));
    const auto want = verdict_beurling(model_space("h3"), 8);
    EXPECT_EQ(v.outcome, Outcome::heat_derivative);
    EXPECT_EQ(v.ktypes, want.ktypes);
    EXPECT_DOUBLE_EQ(v.deg_bound, want.deg_bound);
}

TEST(Cli, VerdictCowlingPriceAcceptsInfinity) {
    const auto r = run_cli({"verdict", "cp", "--a", "0.25", "--b", "1", "--p1", "inf", "--p2", "inf", "--m", "0", "--n", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["verdict"], "HeatKernelMultiple");
}

TEST(Cli, SphfnCsvRoundTrip) {
    const auto r = run_cli({"sphfn", "--space", "complex_hyperbolic(2)", "--lambda", "1.5", "--t", "0", "0.5", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto t = io::parse_csv(r.out);
    EXPECT_EQ(t.header.at("space"), "complex_hyperbolic(2)");
    EXPECT_EQ(t.header.at("operation"), "sphfn");
    EXPECT_EQ(t.header.at("config").size(), 16u);
    EXPECT_EQ(t.columns, (std::vector<std::string>{"grid", "value_re", "value_im"}));
    ASSERT_EQ(t.rows.size(), 3u);
    const auto s = model_space("complex_hyperbolic(2)");
    for (const auto& row : t.rows) EXPECT_EQ(row[1], spherical_function(s, 1.5, row[0]).real());
    EXPECT_EQ(io::write_csv(t), r.out);
}

TEST(Cli, PlancherelAndHeatTables) {
    const auto p = io::parse_csv(run_cli({"plancherel", "--space", "h3", "--lambda-max", "4", "--points", "5"}).out);
    ASSERT_EQ(p.rows.size(), 5u);
    EXPECT_EQ(p.rows[2][1], 4.0);
    const auto h = run_cli({"heat", "--space", "h3", "--time", "1", "--r-max", "2", "--points", "3", "--method", "closed"});
    ASSERT_EQ(h.code, 0);
    const auto t = io::parse_csv(h.out);
    EXPECT_EQ(t.rows[1][1], heat_kernel(model_space("h3"), 1.0, 1.0, HeatMethod::closed_form));
}

TEST(Cli, MassJson) {
    const auto r = run_cli({"mass", "--space", "h3", "--time", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["value"].get<double>(), 1.0, 1e-8);
}

TEST(Cli, BeurlingReportRoundTrip) {
    const auto r = run_cli({"beurling", "--space", "h3", "--profile", "heat:1", "--d", "8", "--ladder", "1", "2", "4", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const auto rep = io::report_from_json(j);
    EXPECT_EQ(rep.ladder, (std::vector<double>{1, 2, 4, 8}));
    EXPECT_EQ(io::report_json(rep)["partial_values"], j["partial_values"]);
    EXPECT_EQ(j["classification"], to_string(rep.classification));
}

TEST(Cli, ReportWithNonFiniteValuesRoundTrips) {
    ConvergenceReport r;
    r.ladder = {1, 2, 3, 4};
    r.partial_values = {0.0, 1.5, INFINITY, INFINITY};
    r.log_partial_values = {-INFINITY, std::log(1.5), 800.0, 900.0};
    r.classification = Classification::diverging;
    const auto back = io::report_from_json(json::parse(io::report_json(r).dump()));
    EXPECT_EQ(back.partial_values, r.partial_values);
    EXPECT_EQ(back.log_partial_values, r.log_partial_values);
    EXPECT_EQ(back.classification, r.classification);
    EXPECT_FALSE(back.stabilized_value.has_value());
}

TEST(Cli, CsvRoundTripIsExact) {
    io::Table t;
    t.header = {{"space", "h3"}, {"operation", "x"}, {"config", "0123456789abcdef"}};
    t.columns = {"grid", "value"};
    t.rows = {{0.1, 1.0 / 3.0}, {1e-300, -2.5e300}, {5.0, INFINITY}, {6.0, -0.0}};
    const auto back = io::parse_csv(io::write_csv(t));
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.columns, t.columns);
    EXPECT_EQ(back.rows, t.rows);
    const auto nan_row = io::parse_csv("grid,value\n1,nan\n");
    EXPECT_TRUE(std::isnan(nan_row.rows[0][1]));
    EXPECT_THROW(io::parse_csv("grid,value\n1\n"), invalid_parameter);
    EXPECT_THROW(io::parse_csv("grid,value\n1,abc\n"), invalid_parameter);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"beurling", "--space", "h3", "--profile", "heat:1", "--d", "6", "--ladder", "1", "2", "4", "8"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    const std::vector<std::string> table{"sphfn", "--space", "quaternionic_hyperbolic(2)", "--lambda", "2", "--t", "1", "5"};
    EXPECT_EQ(run_cli(table).out, run_cli(table).out);
}

TEST(Cli, ConfigFileAndPrecedence) {
    const auto path = temp_file("config.json");
    {
        std::ofstream f(path);
        f << R"j({"space": "complex_hyperbolic(2)", "panels_per_unit": 20, "output_format": "json"})j";
    }
    const std::vector<std::string> base{"mass", "--time", "1", "--config", path.string()};
    auto cfg = [](const Result& r) { return json::parse(r.out)["config"]; };

    auto from_file = run_cli(base);
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(cfg(from_file)["space"], "complex_hyperbolic(2)");
    EXPECT_EQ(cfg(from_file)["panels_per_unit"], 20);
    {
        EnvGuard env("HARMONIC_QUAD_PANELS", "24");
        EXPECT_EQ(cfg(run_cli(base))["panels_per_unit"], 24);
        auto args = base;
        args.insert(args.end(), {"--panels-per-unit", "12", "--space", "h3"});
        const auto flagged = run_cli(args);
        EXPECT_EQ(cfg(flagged)["panels_per_unit"], 12);
        EXPECT_EQ(cfg(flagged)["space"], "h3");
    }
    std::filesystem::remove(path);
}

TEST(Cli, EnvironmentPanelsChangeHash) {
    const std::vector<std::string> args{"plancherel", "--lambda-max", "2", "--points", "3"};
    const auto plain = io::parse_csv(run_cli(args).out);
    EnvGuard env("HARMONIC_QUAD_PANELS", "32");
    const auto tuned = io::parse_csv(run_cli(args).out);
    EXPECT_NE(plain.header.at("config"), tuned.header.at("config"));
    EXPECT_EQ(plain.rows, tuned.rows);
}

TEST(Cli, BadEnvironmentPanelsIsUsageError) {
    EnvGuard env("HARMONIC_QUAD_PANELS", "-3");
    EXPECT_EQ(run_cli({"plancherel", "--lambda-max", "2"}).code, cli::exit_usage);
}

TEST(Cli, UnknownConfigKeyIsUsageError) {
    const auto path = temp_file("bad.json");
    {
        std::ofstream f(path);
        f << R"j({"space": "h3", "panel_count": 3})j";
    }
    const auto r = run_cli({"mass", "--time", "1", "--config", path.string()});
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_NE(r.err.find("panel_count"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"sphfn", "--lambda", "1"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"sphfn", "--space", "h7", "--lambda", "1", "--t", "1"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"heat", "--time", "-1", "--r-max", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"heat", "--time", "1", "--r-max", "2", "--method", "magic"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"verdict", "hardy", "--a", "0", "--b", "1"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"beurling", "--profile", "cosine:1", "--d", "8"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"selftest", "--suite", "nope"}).code, cli::exit_usage);
}

TEST(Cli, HelpExitsCleanly) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict"), std::string::npos);
}

TEST(Cli, OutputFile) {
    const auto path = temp_file("out.csv");
    const auto r = run_cli({"plancherel", "--lambda-max", "1", "--points", "2", "--output", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(io::parse_csv(ss.str()).rows.size(), 2u);
    std::filesystem::remove(path);
}

TEST(Cli, QuickSelftestPasses) {
    const auto r = run_cli({"selftest", "--suite", "quick", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    for (const auto& c : json::parse(r.out)["results"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Cli, BinaryExitCodes) {
    const std::string exe = HARMONIC_CLI_PATH;
    auto status = [&](const std::string& args) {
        const int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("verdict hardy --space h3 --a 0.25 --b 1"), 0);
    EXPECT_EQ(status("no-such-command"), 2);
    EXPECT_EQ(status("sphfn --space h3 --lambda 1 --t -1"), 2);
}
