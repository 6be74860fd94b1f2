#include "pb/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pb/analysis.hpp"
#include "pb/grid.hpp"
#include "pb/numeric_core.hpp"
#include "pb/operators.hpp"
#include "pb/report_io.hpp"

namespace pb {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    UsageError(std::string field, const std::string& message)
        : std::runtime_error(message), field(std::move(field)) {}
    std::string field;
};

struct FunctionArgs {
    std::string name;
    std::string csv_path;
};

struct GridArgs {
    int points = 10001;
    bool no_refine = false;
    double offset = 1e-9;

    GridSpec spec() const { return GridSpec{points, !no_refine, offset}; }
};

struct Config {
    unsigned workers = 0;
    std::string out_path;

    // eval / compare
    FunctionArgs fn;
    std::string op = "rn";
    int n = 0;
    std::optional<double> x;
    std::optional<int> eval_points;
    std::string c_mode = "zero";
    double c_value = 0.0;
    int precision = 15;

    // scan
    bool sikkema = false;
    bool popoviciu = false;
    std::string n_range;
    GridArgs grid;
    int resolution = 10000;
    std::string csv_path;

    // verify
    bool lemma = false;
    bool kozniewska = false;
    bool n6 = false;
    bool conjecture = false;
    bool dominance = false;
    int c_samples = 21;
    int c_grid = 21;
    double c_max = 0.2;
};

void emit_error(std::ostream& err, const std::string& type, const std::string& field, const std::string& message) {
    nlohmann::ordered_json doc = {{"error", {{"type", type}, {"field", field}, {"message", message}}}};
    err << doc.dump() << '\n';
}

FunctionSpec load_function(const FunctionArgs& args) {
    if (!args.csv_path.empty()) return FunctionSpec::load_csv(args.csv_path);
    if (args.name.empty()) throw UsageError("fn", "one of --fn or --fn-csv is required");
    return FunctionSpec::named(args.name);
}

NRange parse_range(const std::string& text, int lo, int hi) {
    const NRange range = NRange::parse(text);
    if (range.lo < lo || range.hi > hi)
        throw UsageError("n", "n-range " + text + " must lie within " + std::to_string(lo) + ".." + std::to_string(hi));
    return range;
}

/// Writes to --out when given, otherwise to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw UsageError("out", "cannot open '" + path + "' for writing");
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

OperatorKind parse_operator(const std::string& op) {
    if (op == "bernstein") return OperatorKind::bernstein;
    if (op == "rn") return OperatorKind::r_n;
    throw UsageError("op", "operator must be bernstein or rn");
}

int cmd_eval(const Config& cfg, std::ostream& out) {
    const FunctionSpec f = load_function(cfg.fn);
    if (cfg.n < 1) throw UsageError("n", "--n must be >= 1");
    if (cfg.op == "rn" && cfg.n < 2) throw UsageError("n", "R_n requires n > 1");

    std::optional<CProfile> profile;
    if (cfg.op == "polya") {
        if (cfg.c_mode == "zero") profile = CProfile::zero();
        else if (cfg.c_mode == "rn") profile = CProfile::r_n();
        else profile = CProfile::constant(cfg.c_value);
    }
    auto evaluate = [&](double x) {
        if (cfg.op == "polya") return polya_operator_eval(f, cfg.n, x, *profile);
        return operator_eval(parse_operator(cfg.op), f, cfg.n, x);
    };

    Sink sink(cfg.out_path, out);
    if (cfg.x) {
        if (!(*cfg.x >= 0.0 && *cfg.x <= 1.0)) throw UsageError("x", "--x must lie in [0,1]");
        sink.stream() << format_double(evaluate(*cfg.x), cfg.precision) << '\n';
        return kExitOk;
    }
    if (!cfg.eval_points || *cfg.eval_points < 2) throw UsageError("points", "give --x or --points >= 2");
    std::ostream& csv = sink.stream();
    csv << "x,fx,opx,error\n";
    for (double x : build_x_grid(GridSpec{*cfg.eval_points, false, 1e-9}, 0)) {
        const double fx = f(x), opx = evaluate(x);
        csv << format_double(x) << ',' << format_double(fx) << ',' << format_double(opx) << ','
            << format_double(opx - fx) << '\n';
    }
    return kExitOk;
}

int cmd_scan(const Config& cfg, std::ostream& out) {
    if (cfg.sikkema == cfg.popoviciu) throw UsageError("scan", "choose exactly one of --sikkema or --popoviciu");
    const RunOptions options{cfg.workers};
    const GridSpec grid = cfg.grid.spec();
    ScanReport report;
    std::vector<CurvePoint> curve;

    if (cfg.sikkema) {
        const NRange range = parse_range(cfg.n_range.empty() ? "2..30" : cfg.n_range, 2, 200);
        grid.validate(1000);
        CMode mode;
        if (cfg.c_mode == "zero") mode = CMode::zero;
        else if (cfg.c_mode == "rn") mode = CMode::r_n;
        else throw UsageError("c-mode", "scan --sikkema takes --c-mode zero or rn");
        report = scan_sup(range, mode, grid, options);
        if (!cfg.csv_path.empty()) curve = sikkema_curve(range, mode, grid, options);
    } else {
        const FunctionSpec f = load_function(cfg.fn);
        if (f.is_constant()) throw UsageError("fn", "Popoviciu ratio is undefined for a constant function");
        const OperatorKind op = parse_operator(cfg.op);
        const NRange range = parse_range(cfg.n_range.empty() ? "2..30" : cfg.n_range, 2, 200);
        grid.validate(1000);
        report = scan_popoviciu(f, range, op, grid, cfg.resolution, options);
        if (!cfg.csv_path.empty()) {
            for (int n = range.lo; n <= range.hi; ++n) {
                const double omega = modulus_of_continuity(f, 1.0 / std::sqrt(static_cast<double>(n)), cfg.resolution);
                for (double x : build_x_grid(GridSpec{grid.points, false, grid.breakpoint_offset}, 0))
                    curve.push_back({n, x, std::abs(operator_eval(op, f, n, x) - f(x)) / omega});
            }
        }
    }

    Sink sink(cfg.out_path, out);
    sink.stream() << dump_report(to_json(report));
    if (!cfg.csv_path.empty()) {
        std::ofstream csv(cfg.csv_path, std::ios::binary);
        if (!csv) throw UsageError("csv", "cannot open '" + cfg.csv_path + "' for writing");
        write_curve_csv(csv, curve);
    }
    return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    if (!(cfg.lemma || cfg.kozniewska || cfg.n6 || cfg.conjecture || cfg.dominance))
        throw UsageError("verify", "select at least one of --lemma --kozniewska --dominance --n6 --conjecture");
    const RunOptions options{cfg.workers};
    const GridSpec grid = cfg.grid.spec();
    grid.validate();
    auto range_or = [&](const char* fallback) {
        return parse_range(cfg.n_range.empty() ? fallback : cfg.n_range, 2, 200);
    };

    std::vector<VerificationReport> reports;
    if (cfg.lemma) reports.push_back(verify_lemma_claim(range_or("2..40"), grid, cfg.c_samples, options));
    if (cfg.kozniewska) {
        CSweep sweep;
        if (cfg.c_mode == "zero") sweep = CSweep::zero;
        else if (cfg.c_mode == "rn") sweep = CSweep::r_n;
        else if (cfg.c_mode == "sweep") sweep = CSweep::uniform;
        else throw UsageError("c-mode", "verify --kozniewska takes --c-mode zero, rn or sweep");
        reports.push_back(verify_kozniewska(range_or("2..40"), grid, sweep, cfg.c_samples, options));
    }
    if (cfg.dominance) reports.push_back(verify_f_dominance(range_or("2..40"), grid, options));
    if (cfg.n6) {
        grid.validate(1000);
        reports.push_back(n6_case_check(grid));
    }
    if (cfg.conjecture)
        reports.push_back(conjecture_scan(range_or("2..20"), grid, cfg.c_grid, cfg.c_max, options));

    bool passed = true;
    bool finding = false;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        if (r.claim_id != "conjecture_monotone_in_c") passed = passed && r.passed;
        finding = finding || r.finding;
        list.push_back(to_json(r));
    }
    nlohmann::ordered_json doc = {{"schema", kReportSchema},
                                  {"kind", "verify"},
                                  {"passed", passed},
                                  {"finding", finding},
                                  {"reports", list}};
    Sink sink(cfg.out_path, out);
    sink.stream() << dump_report(doc);
    return passed ? kExitOk : kExitFailed;
}

int cmd_compare(const Config& cfg, std::ostream& out) {
    const FunctionSpec f = load_function(cfg.fn);
    if (cfg.n < 2) throw UsageError("n", "compare requires --n > 1");
    const int points = cfg.eval_points.value_or(1001);
    if (points < 2) throw UsageError("points", "--points must be >= 2");
    Sink sink(cfg.out_path, out);
    std::ostream& csv = sink.stream();
    csv << "x,err_bernstein,err_rn\n";
    for (double x : build_x_grid(GridSpec{points, false, 1e-9}, 0)) {
        const double fx = f(x);
        csv << format_double(x) << ',' << format_double(bernstein_eval(f, cfg.n, x) - fx) << ','
            << format_double(r_n_eval(f, cfg.n, x) - fx) << '\n';
    }
    return kExitOk;
}

void add_function_options(CLI::App* cmd, Config& cfg) {
    auto* name = cmd->add_option("--fn", cfg.fn.name, "built-in: constant linear square abs-mid sin-pi sawtooth sqrt");
    auto* csv = cmd->add_option("--fn-csv", cfg.fn.csv_path, "CSV table with header x,fx");
    name->excludes(csv);
}

void add_grid_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--points", cfg.grid.points, "uniform x-grid size")->capture_default_str();
    cmd->add_flag("--no-refine", cfg.grid.no_refine, "skip breakpoint refinement");
    cmd->add_option("--offset", cfg.grid.offset, "one-sided breakpoint offset")->capture_default_str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Polya-Bernstein operator evaluation and Popoviciu-type inequality checks", "pbtool"};
    app.require_subcommand(1, 1);
    app.add_option("--workers", cfg.workers, "worker threads (0 = all cores)")->envname("PB_WORKERS");

    auto* eval = app.add_subcommand("eval", "evaluate B_n, R_n or a Polya operator");
    eval->add_option("--op", cfg.op, "bernstein | rn | polya")
        ->check(CLI::IsMember({"bernstein", "rn", "polya"}))
        ->capture_default_str();
    add_function_options(eval, cfg);
    eval->add_option("--n", cfg.n, "degree")->required();
    auto* x_opt = eval->add_option("--x", cfg.x, "evaluation point in [0,1]");
    auto* pts_opt = eval->add_option("--points", cfg.eval_points, "grid size (CSV x,fx,opx,error)");
    x_opt->excludes(pts_opt);
    eval->add_option("--c-mode", cfg.c_mode, "polya profile: zero | rn | const")
        ->check(CLI::IsMember({"zero", "rn", "const"}));
    eval->add_option("--c", cfg.c_value, "constant c for --c-mode const");
    eval->add_option("--precision", cfg.precision, "significant digits for single values")
        ->check(CLI::Range(1, 17));
    eval->add_option("--out", cfg.out_path, "output file");

    auto* scan = app.add_subcommand("scan", "sup scans of the Sikkema function or Popoviciu ratios");
    scan->add_flag("--sikkema", cfg.sikkema, "scan 1 + sqrt(n)(F(x) + F(1-x))");
    scan->add_flag("--popoviciu", cfg.popoviciu, "scan |Op(f;x) - f(x)| / omega(n^-1/2)");
    scan->add_option("--n", cfg.n_range, "n-range lo..hi (default 2..30)");
    scan->add_option("--c-mode", cfg.c_mode, "zero | rn");
    add_function_options(scan, cfg);
    scan->add_option("--op", cfg.op, "bernstein | rn")->check(CLI::IsMember({"bernstein", "rn"}));
    add_grid_options(scan, cfg);
    scan->add_option("--resolution", cfg.resolution, "grid resolution for omega")->capture_default_str();
    scan->add_option("--out", cfg.out_path, "ScanReport JSON path (default stdout)");
    scan->add_option("--csv", cfg.csv_path, "per-n curves as n,x,value");

    auto* verify = app.add_subcommand("verify", "run inequality and identity checks");
    verify->add_flag("--lemma", cfg.lemma, "rising-factorial inequality sweep");
    verify->add_flag("--kozniewska", cfg.kozniewska, "truncated-moment closed form and reflection identity");
    verify->add_flag("--dominance", cfg.dominance, "F_n^{c(x)} <= F_n^0");
    verify->add_flag("--n6", cfg.n6, "n = 6 case bounds");
    verify->add_flag("--conjecture", cfg.conjecture, "monotonicity in c (exploratory)");
    verify->add_option("--n", cfg.n_range, "n-range lo..hi");
    add_grid_options(verify, cfg);
    verify->add_option("--c-samples", cfg.c_samples, "c samples per x")->capture_default_str();
    verify->add_option("--c-mode", cfg.c_mode, "kozniewska c choice: zero | rn | sweep");
    verify->add_option("--c-grid", cfg.c_grid, "conjecture c-grid size")->capture_default_str();
    verify->add_option("--c-max", cfg.c_max, "conjecture c upper end")->capture_default_str();
    verify->add_option("--out", cfg.out_path, "report JSON path (default stdout)");

    auto* compare = app.add_subcommand("compare", "B_n vs R_n error profiles as CSV x,err_bernstein,err_rn");
    add_function_options(compare, cfg);
    compare->add_option("--n", cfg.n, "degree")->required();
    compare->add_option("--points", cfg.eval_points, "grid size (default 1001)");
    compare->add_option("--out", cfg.out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", "arguments", e.what());
        return kExitUsage;
    }

    // Subcommand-specific defaults.
    if (verify->parsed() && cfg.c_mode == "zero" && verify->count("--c-mode") == 0) cfg.c_mode = "sweep";

    try {
        if (eval->parsed()) return cmd_eval(cfg, out);
        if (scan->parsed()) return cmd_scan(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        return cmd_compare(cfg, out);
    } catch (const UsageError& e) {
        emit_error(err, "usage", e.field, e.what());
    } catch (const DomainError& e) {
        emit_error(err, "invalid_argument", e.field(), e.what());
    } catch (const std::exception& e) {
        emit_error(err, "internal", "", e.what());
    }
    return kExitUsage;
}

} // namespace pb
