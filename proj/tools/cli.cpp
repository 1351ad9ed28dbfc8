#include "cli.hpp"

#include "unruh_otto/errors.hpp"
#include "unruh_otto/unruh_otto.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace unruh_otto::cli {

namespace {

constexpr int kMaxSignificantDigits = 12;

double zero_gap_kernel(double v, const specfun::SeriesConfig& series) {
    return specfun::j_kernel({0.0, 2.0 * std::atanh(v)}, series);
}

std::string join_labels(const std::vector<Degeneracy>& ns) {
    std::string out;
    for (const auto& n : ns) {
        if (!out.empty()) out += ';';
        out += n.label();
    }
    return out;
}

std::vector<Degeneracy> default_degeneracies() {
    return {Degeneracy{1, false}, Degeneracy{2, false}, Degeneracy{3, false}, Degeneracy{10, false},
            Degeneracy{1, true}};
}

void require_speed(double v) {
    if (!(v > 0.0 && v < 1.0)) throw DomainError("speed v must lie in (0, 1)");
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& value) -> std::string {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(value);
            } else if constexpr (std::is_same_v<T, long>) {
                return std::to_string(value);
            } else if constexpr (std::is_same_v<T, bool>) {
                return value ? "true" : "false";
            } else {
                return value;
            }
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& value) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(value)) return nullptr;
                return std::stod(format_number(value));
            } else {
                return value;
            }
        },
        cell);
}

double rounded(double x) { return std::isfinite(x) ? std::stod(format_number(x)) : x; }

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw DomainError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

Degeneracy Degeneracy::parse(std::string_view text) {
    if (text == "inf") return {1, true};
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
        throw DomainError("degeneracy must be a positive integer or 'inf', got '" + std::string(text) + "'");
    }
    return {value, false};
}

std::string Degeneracy::label() const { return infinite ? "inf" : std::to_string(n); }

std::vector<double> Range::values() const {
    if (!explicit_values.empty()) return explicit_values;
    if (count < 2) throw DomainError("range count must be >= 2");
    if (!std::isfinite(start) || !std::isfinite(stop)) throw DomainError("range bounds must be finite");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
    out.back() = stop;
    return out;
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    std::string shortest(buf, res.ptr);
    int digits = 0;
    bool leading = true;
    for (char c : shortest) {
        if (c == 'e' || c == 'E') break;
        if (c < '0' || c > '9') continue;
        if (leading && c == '0') continue;
        leading = false;
        ++digits;
    }
    if (digits <= kMaxSignificantDigits) return shortest;
    res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, kMaxSignificantDigits);
    return std::string(buf, res.ptr);
}

std::string render(const Table& table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "# unruh-otto " << kVersion << ' ' << table.command;
        for (const auto& [key, value] : table.meta) os << ' ' << key << '=' << value;
        os << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
            os << '\n';
        }
        return os.str();
    }
    nlohmann::ordered_json doc;
    doc["meta"]["tool"] = "unruh-otto";
    doc["meta"]["version"] = kVersion;
    doc["meta"]["command"] = table.command;
    for (const auto& [key, value] : table.meta) doc["meta"][key] = value;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

unsigned worker_count() {
    if (const char* env = std::getenv("UNRUH_OTTO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    // Static striding keeps the assignment of indices to threads fixed.
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

Table fig1(const Fig1Request& request) {
    require_speed(request.v);
    if (!(request.p >= 0.0 && request.p <= 1.0)) throw DomainError("fig1: p must lie in [0, 1]");
    const auto ns = request.degeneracies.empty() ? default_degeneracies() : request.degeneracies;
    const auto as = request.a_range.values();
    for (double a : as) {
        if (!(a > 0.0)) throw DomainError("fig1: a_H values must be > 0");
    }

    Table table;
    table.command = "fig1";
    table.meta = {{"p", format_number(request.p)},
                  {"v", format_number(request.v)},
                  {"n", join_labels(ns)},
                  {"a_min", format_number(as.front())},
                  {"a_max", format_number(as.back())},
                  {"a_count", std::to_string(as.size())},
                  {"tol", format_number(request.series.rel_tol)}};
    table.columns = {"a_H", "n", "delta_p_over_g2"};
    table.rows.resize(as.size() * ns.size());

    parallel_for(as.size(), worker_count(), [&](std::size_t i) {
        for (std::size_t j = 0; j < ns.size(); ++j) {
            const response::ResponseArgs args{request.p, ns[j].n, as[i], 1.0, request.v, 1.0};
            const double value = ns[j].infinite ? response::delta_p_limit_n_inf(args, request.series)
                                                : response::delta_p_closed(args, request.series);
            table.rows[i * ns.size() + j] = {as[i], ns[j].label(), value};
        }
    });
    return table;
}

Table fig2(const Fig2Request& request) {
    require_speed(request.v);
    const auto ns = request.degeneracies.empty() ? default_degeneracies() : request.degeneracies;
    const auto ps = request.p_range.values();
    for (double p : ps) {
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("fig2: p values must lie in [0, 1]");
    }
    // At a = 0 both kernel signs coincide.
    const double j0 = zero_gap_kernel(request.v, request.series);

    Table table;
    table.command = "fig2";
    table.meta = {{"a_H", "0"},
                  {"v", format_number(request.v)},
                  {"n", join_labels(ns)},
                  {"p_min", format_number(ps.front())},
                  {"p_max", format_number(ps.back())},
                  {"p_count", std::to_string(ps.size())},
                  {"tol", format_number(request.series.rel_tol)}};
    table.columns = {"p", "n", "delta_p_over_g2"};
    for (double p : ps) {
        for (const auto& n : ns) {
            const double value = n.infinite ? (1.0 - p) * j0 : (1.0 - p) * j0 - p / n.n * j0;
            table.rows.push_back({p, n.label(), value});
        }
    }
    return table;
}

void SweepRequest::validate() const {
    static const std::set<std::string> variables = {"a_H", "p", "n", "v"};
    if (!variables.contains(variable)) {
        throw DomainError("sweep: --var must be one of a_H, p, n, v (got '" + variable + "')");
    }
    const auto values = range.values();
    for (double x : values) {
        if (variable == "a_H" && !(x >= 0.0)) throw DomainError("sweep: a_H values must be >= 0");
        if (variable == "p" && !(x >= 0.0 && x <= 1.0)) throw DomainError("sweep: p values must lie in [0, 1]");
        if (variable == "v" && !(x > 0.0 && x < 1.0)) throw DomainError("sweep: v values must lie in (0, 1)");
        if (variable == "n" && !(x >= 1.0 && x == std::floor(x))) {
            throw DomainError("sweep: n values must be positive integers");
        }
    }
}

Table sweep(const SweepRequest& request) {
    request.validate();
    const auto values = request.range.values();

    Table table;
    table.command = "sweep";
    table.meta = {{"var", request.variable},
                  {"a_H", format_number(request.a_H)},
                  {"p", format_number(request.p)},
                  {"n", request.n.label()},
                  {"v", format_number(request.v)},
                  {"count", std::to_string(values.size())},
                  {"tol", format_number(request.series.rel_tol)}};
    table.columns = {"a_H", "p", "n", "v", "delta_p_over_g2", "delta_p_limit_n_inf_over_g2"};
    table.rows.resize(values.size());

    parallel_for(values.size(), worker_count(), [&](std::size_t i) {
        double a = request.a_H;
        double p = request.p;
        double v = request.v;
        Degeneracy n = request.n;
        if (request.variable == "a_H") a = values[i];
        if (request.variable == "p") p = values[i];
        if (request.variable == "v") v = values[i];
        if (request.variable == "n") n = {static_cast<int>(values[i]), false};
        const response::ResponseArgs args{p, n.n, a, 1.0, v, 1.0};
        const double limit = response::delta_p_limit_n_inf(args, request.series);
        const double value = n.infinite ? limit : response::delta_p_closed(args, request.series);
        table.rows[i] = {a, p, n.label(), v, value, limit};
    });
    return table;
}

std::string OraclePoint::label() const {
    return "a=" + format_number(a) + ";v=" + format_number(v) + ";p=" + format_number(p) +
           ";n=" + std::to_string(n);
}

std::vector<OraclePoint> default_oracle_grid() {
    std::vector<OraclePoint> grid;
    for (double a : {0.3, 0.6, 1.0}) {
        for (double v : {0.5, 0.9}) {
            for (auto [p, n] : {std::pair{0.0, 1}, std::pair{0.5, 2}, std::pair{0.75, 4}}) {
                grid.push_back({a, v, p, n});
            }
        }
    }
    return grid;
}

OracleOutcome oracle_check(const OracleRequest& request) {
    request.quadrature.validate();
    OracleOutcome outcome;
    auto& table = outcome.table;
    table.command = "oracle-check";
    std::string schedule;
    for (double e : request.quadrature.epsilon_schedule) {
        if (!schedule.empty()) schedule += ';';
        schedule += format_number(e);
    }
    table.meta = {{"points", std::to_string(request.points.size())},
                  {"grid", std::to_string(request.quadrature.grid)},
                  {"K", std::to_string(request.quadrature.image_terms)},
                  {"domain_factor", format_number(request.quadrature.domain_factor)},
                  {"epsilon_over_tau_half", schedule},
                  {"extrapolate", request.quadrature.extrapolate ? "true" : "false"},
                  {"quad_tol", format_number(request.quadrature.rel_tol)},
                  {"tol", format_number(request.series.rel_tol)}};
    table.columns = {"point", "closed", "quadrature", "abs_diff", "error_estimate", "pass"};
    table.rows.resize(request.points.size());
    std::vector<char> passed(request.points.size(), 0);

    parallel_for(request.points.size(), worker_count(), [&](std::size_t i) {
        const auto& pt = request.points[i];
        const response::ResponseArgs args{pt.p, pt.n, pt.a, 1.0, pt.v, 1.0};
        const double closed = response::delta_p_closed(args, request.series);
        double quad = std::nan("");
        double err = std::nan("");
        try {
            const auto q = response::delta_p_quadrature(args, request.quadrature);
            quad = q.estimate;
            err = q.error_estimate;
        } catch (const NonConvergence& e) {
            std::cerr << "oracle-check: " << pt.label() << ": " << e.what() << '\n';
        }
        const double diff = std::abs(closed - quad);
        const bool ok = std::isfinite(diff) && diff <= err + 1e-2 * std::abs(closed);
        passed[i] = ok;
        table.rows[i] = {pt.label(), closed, quad, diff, err, ok};
    });
    outcome.all_pass = std::all_of(passed.begin(), passed.end(), [](char c) { return c != 0; });
    return outcome;
}

CycleConfig parse_cycle_config(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::ostringstream os;
        os << "config: syntax error at line " << line << ", column " << column << ": " << e.what();
        throw ConfigError(os.str());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");

    static const std::set<std::string> known = {"n", "omega1", "omega2", "g", "v", "alpha_H", "alpha_C", "p"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) throw ConfigError("config: unknown field '" + key + "'");
    }
    auto number = [&](const char* field) -> std::optional<double> {
        if (!doc.contains(field)) return std::nullopt;
        const auto& v = doc.at(field);
        if (!v.is_number()) throw ConfigError(std::string("config: field '") + field + "' must be a number");
        return v.get<double>();
    };
    auto required = [&](const char* field) {
        auto v = number(field);
        if (!v) throw ConfigError(std::string("config: missing required field '") + field + "'");
        return *v;
    };

    CycleConfig cfg;
    if (!doc.contains("n")) throw ConfigError("config: missing required field 'n'");
    if (!doc.at("n").is_number_integer() || doc.at("n").get<long>() < 1) {
        throw ConfigError("config: field 'n' must be a positive integer");
    }
    cfg.params.spec.n = doc.at("n").get<int>();
    cfg.params.spec.omega1 = required("omega1");
    cfg.params.spec.omega2 = required("omega2");
    cfg.params.v = required("v");
    cfg.params.alpha_H = required("alpha_H");
    cfg.params.alpha_C = required("alpha_C");
    if (auto g = number("g")) {
        cfg.params.spec.g = *g;
        cfg.g_supplied = true;
    }
    cfg.p = number("p");
    try {
        cfg.params.validate();
        if (cfg.p && !(*cfg.p >= 0.0 && *cfg.p <= 1.0)) throw DomainError("field 'p' must lie in [0, 1]");
    } catch (const DomainError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

CycleOutcome cycle_command(const CycleConfig& config, const specfun::SeriesConfig& series) {
    const auto& params = config.params;
    const auto& s = params.spec;
    std::optional<double> P;
    double p = 0.0;
    if (config.p) {
        p = *config.p;
    } else {
        P = cycle::cal_P(params.a_H(), params.a_C(), params.v, series);
        p = cycle::solve_initial_population(params, series);
    }
    const auto r = cycle::run_cycle(params, p, series);
    const double g2 = s.g * s.g;

    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["omega1"] = s.omega1;
    j["omega2"] = s.omega2;
    j["g"] = s.g;
    j["g_supplied"] = config.g_supplied;
    j["v"] = params.v;
    j["alpha_H"] = params.alpha_H;
    j["alpha_C"] = params.alpha_C;
    j["a_H"] = rounded(params.a_H());
    j["a_C"] = rounded(params.a_C());
    j["p_source"] = config.p ? "config" : "closed_cycle";
    if (P) j["P"] = rounded(*P);
    j["p_used"] = rounded(r.p_used);
    j["W1"] = rounded(r.W1);
    j["Q2"] = rounded(r.Q2);
    j["W3"] = rounded(r.W3);
    j["Q4"] = rounded(r.Q4);
    j["Q_total"] = rounded(r.Q_total);
    j["W_total"] = rounded(r.W_total);
    j["eta"] = rounded(r.eta);
    j["delta_pH"] = rounded(r.delta_pH);
    j["delta_pC"] = rounded(r.delta_pC);
    j["delta_pH_over_g2"] = rounded(r.delta_pH / g2);
    j["delta_pC_over_g2"] = rounded(r.delta_pC / g2);
    j["validity_margin"] = rounded(r.validity_margin);
    j["step_residual"] = rounded(r.step_residual);
    j["flags"]["closed_cycle_ok"] = r.closed_cycle_ok;
    j["flags"]["perturbative_ok"] = r.perturbative_ok;
    j["flags"]["positive_work"] = r.positive_work;
    j["flags"]["kieu_condition"] = r.kieu_ok;

    CycleOutcome out;
    out.report = std::move(j);
    out.exit_code = !r.perturbative_ok ? 2 : (!r.closed_cycle_ok ? 3 : 0);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Unruh quantum Otto engine with a degenerate excited level"};
    app.set_version_flag("--version", std::string("unruh-otto ") + kVersion);
    app.require_subcommand(1);

    std::string out = "-";
    std::string format = "csv";
    double tol = 1e-10;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out, "Output path, '-' for stdout")->capture_default_str();
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--tol", tol, "Relative tolerance of the series evaluations")->capture_default_str();
    };

    std::vector<std::string> n_tokens;

    Fig1Request f1;
    auto* fig1_cmd = app.add_subcommand("fig1", "delta_p/g^2 against a_H for several degeneracies");
    add_common(fig1_cmd);
    fig1_cmd->add_option("--p", f1.p, "Initial excited population")->capture_default_str();
    fig1_cmd->add_option("--n", n_tokens, "Degeneracy (repeatable, accepts inf)");
    fig1_cmd->add_option("--v", f1.v, "Swing speed")->capture_default_str();
    fig1_cmd->add_option("--a-min", f1.a_range.start)->capture_default_str();
    fig1_cmd->add_option("--a-max", f1.a_range.stop)->capture_default_str();
    fig1_cmd->add_option("--a-count", f1.a_range.count)->capture_default_str();

    Fig2Request f2;
    auto* fig2_cmd = app.add_subcommand("fig2", "delta_p/g^2 against p at zero gap");
    add_common(fig2_cmd);
    fig2_cmd->add_option("--n", n_tokens, "Degeneracy (repeatable, accepts inf)");
    fig2_cmd->add_option("--v", f2.v, "Swing speed")->capture_default_str();
    fig2_cmd->add_option("--p-min", f2.p_range.start)->capture_default_str();
    fig2_cmd->add_option("--p-max", f2.p_range.stop)->capture_default_str();
    fig2_cmd->add_option("--p-count", f2.p_range.count)->capture_default_str();

    std::string config_path;
    auto* cycle_cmd = app.add_subcommand("cycle", "Full cycle report from a JSON config");
    add_common(cycle_cmd);
    cycle_cmd->add_option("--config", config_path, "Flat JSON config")->required();

    SweepRequest sw;
    std::string sweep_n = "1";
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter of delta_p/g^2");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--var", sw.variable, "a_H, p, n or v")->required();
    sweep_cmd->add_option("--start", sw.range.start)->capture_default_str();
    sweep_cmd->add_option("--stop", sw.range.stop)->capture_default_str();
    sweep_cmd->add_option("--count", sw.range.count)->capture_default_str();
    sweep_cmd->add_option("--values", sw.range.explicit_values, "Explicit values instead of a range");
    sweep_cmd->add_option("--a", sw.a_H, "Fixed a_H")->capture_default_str();
    sweep_cmd->add_option("--p", sw.p, "Fixed p")->capture_default_str();
    sweep_cmd->add_option("--n", sweep_n, "Fixed degeneracy (accepts inf)")->capture_default_str();
    sweep_cmd->add_option("--v", sw.v, "Fixed speed")->capture_default_str();

    OracleRequest orq;
    std::vector<double> oracle_a;
    std::vector<double> oracle_v;
    std::vector<std::string> oracle_pn;
    std::vector<double> oracle_eps;
    bool no_extrapolate = false;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Closed form against brute-force quadrature");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--a", oracle_a, "Gap ratios (repeatable)");
    oracle_cmd->add_option("--v", oracle_v, "Speeds (repeatable)");
    oracle_cmd->add_option("--pn", oracle_pn, "p:n pairs (repeatable)");
    oracle_cmd->add_option("--grid", orq.quadrature.grid)->capture_default_str();
    oracle_cmd->add_option("--K", orq.quadrature.image_terms)->capture_default_str();
    oracle_cmd->add_option("--domain-factor", orq.quadrature.domain_factor)->capture_default_str();
    oracle_cmd->add_option("--eps", oracle_eps, "Regulators in units of tau_half, decreasing");
    oracle_cmd->add_option("--quad-tol", orq.quadrature.rel_tol)->capture_default_str();
    oracle_cmd->add_flag("--no-extrapolate", no_extrapolate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const OutputFormat fmt = parse_format(format);
        specfun::SeriesConfig series;
        series.rel_tol = tol;
        series.validate();
        std::vector<Degeneracy> ns;
        for (const auto& t : n_tokens) ns.push_back(Degeneracy::parse(t));

        if (fig1_cmd->parsed()) {
            f1.degeneracies = ns;
            f1.series = series;
            write_output(out, render(fig1(f1), fmt));
            return 0;
        }
        if (fig2_cmd->parsed()) {
            f2.degeneracies = ns;
            f2.series = series;
            write_output(out, render(fig2(f2), fmt));
            return 0;
        }
        if (sweep_cmd->parsed()) {
            sw.n = Degeneracy::parse(sweep_n);
            sw.series = series;
            write_output(out, render(sweep(sw), fmt));
            return 0;
        }
        if (cycle_cmd->parsed()) {
            const auto cfg = parse_cycle_config(read_file(config_path));
            const auto outcome = cycle_command(cfg, series);
            write_output(out, outcome.report.dump(2) + "\n");
            return outcome.exit_code;
        }
        if (oracle_cmd->parsed()) {
            if (!oracle_eps.empty()) orq.quadrature.epsilon_schedule = oracle_eps;
            orq.quadrature.extrapolate = !no_extrapolate;
            orq.series = series;
            if (!oracle_a.empty() || !oracle_v.empty() || !oracle_pn.empty()) {
                if (oracle_a.empty()) oracle_a = {0.3, 0.6, 1.0};
                if (oracle_v.empty()) oracle_v = {0.5, 0.9};
                std::vector<std::pair<double, int>> pn;
                for (const auto& token : oracle_pn) {
                    const auto colon = token.find(':');
                    if (colon == std::string::npos) throw DomainError("--pn expects p:n, got '" + token + "'");
                    const double p = std::stod(token.substr(0, colon));
                    const auto n = Degeneracy::parse(token.substr(colon + 1));
                    if (n.infinite) throw DomainError("--pn needs a finite degeneracy");
                    pn.emplace_back(p, n.n);
                }
                if (pn.empty()) pn = {{0.0, 1}, {0.5, 2}, {0.75, 4}};
                orq.points.clear();
                for (double a : oracle_a) {
                    for (double v : oracle_v) {
                        for (auto [p, n] : pn) orq.points.push_back({a, v, p, n});
                    }
                }
            }
            const auto outcome = oracle_check(orq);
            write_output(out, render(outcome.table, fmt));
            return outcome.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "unruh-otto: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace unruh_otto::cli
