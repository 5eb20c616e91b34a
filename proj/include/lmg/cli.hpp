#pragma once

#include "lmg/hlvqe.hpp"
#include "lmg/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lmg::cli {

using json = nlohmann::ordered_json;

enum class OutputFormat { csv, json };

struct RunConfig {
    std::string command;
    int n = 30;
    double eps = 1.0;
    std::optional<double> vbar = 2.0;
    std::optional<double> v;
    int lambda = 2;
    std::vector<int> lambdas;
    std::vector<double> vbar_grid;
    double eta = 0.07;
    int iters = 80;
    long shots = 100000;
    std::uint64_t seed = 0;
    std::string backend = "analytic";
    StepWindow window;
    std::string out = ".";
    OutputFormat format = OutputFormat::csv;
    UpdateRule update = UpdateRule::normalized;
    double mu0 = 10.0;
    std::optional<double> beta0;
    std::vector<double> theta0;
    ReferenceSpace reference = ReferenceSpace::full;
    bool plot_data = false;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

extern const std::vector<std::string> kCommands;

ModelParams model_of(const RunConfig& cfg);
HlvqeOptions hlvqe_options_of(const RunConfig& cfg);

// Overlay a JSON object onto `base`. Unknown keys and a V/vbar pair are rejected.
RunConfig apply_json(RunConfig base, const json& doc);
json to_json(const RunConfig& cfg);

StepWindow parse_window(const std::string& text);

// Thrown by parse_args when --help is given; carries the usage text.
struct HelpRequested {
    std::string text;
};

// Parse argv: defaults, then --config FILE, then explicit flags. Throws ConfigError.
RunConfig parse_args(int argc, const char* const* argv);

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double x);

// Each table becomes <out>/<name>.csv, or all of them go to <out>/<command>.json.
// With plot_data, every CSV table also gets a long-format <name>_long.csv.
std::vector<std::filesystem::path> emit_report(const RunConfig& cfg, const std::vector<Table>& tables,
                                               const std::vector<std::uint64_t>& seeds);

std::string render_csv(const Table& table, const json& config, const std::vector<std::uint64_t>& seeds,
                       const std::string& timestamp);

void write_atomic(const std::filesystem::path& path, const std::string& contents);

// Dispatch one subcommand; returns the emitted tables (also written to disk).
std::vector<Table> execute(const RunConfig& cfg);

// Full CLI entry point returning the process exit code.
int main_entry(int argc, const char* const* argv);

}  // namespace lmg::cli
