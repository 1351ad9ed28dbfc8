#pragma once

#include "unruh_otto/cycle.hpp"
#include "unruh_otto/response.hpp"
#include "unruh_otto/specfun.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace unruh_otto::cli {

enum class OutputFormat { csv, json };

OutputFormat parse_format(std::string_view text);

/// Excited-level degeneracy as given on the command line; `inf` selects the n -> infinity envelope.
struct Degeneracy {
    int n = 1;
    bool infinite = false;

    static Degeneracy parse(std::string_view text);
    std::string label() const;
};

/// Inclusive linear range with count >= 2, or an explicit list of values.
struct Range {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    std::vector<double> explicit_values;

    std::vector<double> values() const;
};

using Cell = std::variant<double, long, std::string, bool>;

struct Table {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip decimal, capped at 12 significant digits.
std::string format_number(double x);

/// CSV: `#` metadata line, header, rows. JSON: {"meta": {...}, "rows": [{...}]}.
std::string render(const Table& table, OutputFormat format);

/// Worker threads for sweeps: UNRUH_OTTO_THREADS when set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

struct Fig1Request {
    double p = 0.5;
    std::vector<Degeneracy> degeneracies;
    double v = 0.99;
    Range a_range{1e-4, 0.05, 200, {}};
    specfun::SeriesConfig series;
};
Table fig1(const Fig1Request& request);

struct Fig2Request {
    std::vector<Degeneracy> degeneracies;
    double v = 0.99;
    Range p_range{0.0, 1.0, 101, {}};
    specfun::SeriesConfig series;
};
Table fig2(const Fig2Request& request);

struct SweepRequest {
    std::string variable = "a_H"; // one of a_H, p, n, v
    Range range;
    double a_H = 0.01;
    double p = 0.5;
    Degeneracy n;
    double v = 0.99;
    specfun::SeriesConfig series;

    void validate() const;
};
Table sweep(const SweepRequest& request);

struct OraclePoint {
    double a = 0.3;
    double v = 0.5;
    double p = 0.0;
    int n = 1;
    std::string label() const;
};

/// a in {0.3, 0.6, 1.0} x v in {0.5, 0.9} x (p, n) in {(0, 1), (0.5, 2), (0.75, 4)}.
std::vector<OraclePoint> default_oracle_grid();

struct OracleRequest {
    std::vector<OraclePoint> points = default_oracle_grid();
    response::QuadratureConfig quadrature;
    specfun::SeriesConfig series;
};

struct OracleOutcome {
    Table table;
    bool all_pass = true;
};
OracleOutcome oracle_check(const OracleRequest& request);

/// Malformed cycle configuration; the message names the line/column or field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CycleConfig {
    cycle::CycleParams params;
    std::optional<double> p;
    bool g_supplied = false;
};

/// Flat JSON object with fields n, omega1, omega2, g (optional), v, alpha_H, alpha_C, p (optional).
CycleConfig parse_cycle_config(std::string_view text);

struct CycleOutcome {
    nlohmann::ordered_json report;
    // 0 when every flag passes, 2 when perturbative_ok fails, 3 when closed_cycle_ok fails.
    int exit_code = 0;
};
CycleOutcome cycle_command(const CycleConfig& config, const specfun::SeriesConfig& series = {});

/// Full command-line entry point; returns the process exit status.
int run(int argc, char** argv);

} // namespace unruh_otto::cli
