#include "dirfdr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace dirfdr::cli {

namespace {

constexpr std::size_t kStudyM[] = {5, 15, 30, 40};
constexpr std::size_t kStudyTablesM[] = {5, 15, 20, 30, 40};
constexpr std::size_t kStudyN[] = {40, 100, 200, 400};
constexpr double kStudyEffects[] = {0.01, 0.05, 0.15, 0.25};

std::vector<SimulationConfig> study_cells(std::span<const std::size_t> ms, std::uint64_t seed, std::size_t reps) {
    SimulationConfig base;
    base.seed = seed;
    base.reps = reps;
    return expand_grid(ms, kStudyN, kStudyEffects, base);
}

void append_table(std::string& out, std::span<const CellResult> cells, double effect, bool probability) {
    std::set<std::size_t> ms;
    std::set<std::size_t> ns;
    std::map<std::pair<std::size_t, std::size_t>, double> value;
    double alpha = 0.0;
    std::size_t reps = 0;
    for (const auto& c : cells) {
        if (c.config.effect_size != effect) continue;
        ms.insert(c.config.m);
        ns.insert(c.config.n);
        value[{c.config.m, c.config.n}] = probability ? c.summary.p_dfdp_le_bound : c.summary.dfdr_hat;
        alpha = c.config.alpha;
        reps = c.config.reps;
    }
    if (probability) {
        fmt::format_to(std::back_inserter(out), "### P(dFDP <= alpha/2), effect size = {} (alpha = {}, {} reps)\n\n",
                       effect, alpha, reps);
    } else {
        fmt::format_to(std::back_inserter(out), "### dFDR, effect size = {} (alpha = {}, {} reps)\n\n", effect,
                       alpha, reps);
    }
    out += "| m \\ n |";
    for (auto n : ns) fmt::format_to(std::back_inserter(out), " {} |", n);
    out += "\n|---|";
    for (std::size_t k = 0; k < ns.size(); ++k) out += "---|";
    out += '\n';
    for (auto m : ms) {
        fmt::format_to(std::back_inserter(out), "| {} |", m);
        for (auto n : ns) {
            const auto it = value.find({m, n});
            if (it == value.end()) {
                out += "  |";
            } else {
                fmt::format_to(std::back_inserter(out), " {:.2f} |", it->second);
            }
        }
        out += '\n';
    }
    out += '\n';
}

} // namespace

std::vector<SimulationConfig> expand_grid(std::span<const std::size_t> ms, std::span<const std::size_t> ns,
                                          std::span<const double> effects, const SimulationConfig& base) {
    std::vector<SimulationConfig> out;
    out.reserve(ms.size() * ns.size() * effects.size());
    for (auto m : ms) {
        for (auto n : ns) {
            for (auto e : effects) {
                SimulationConfig c = base;
                c.m = m;
                c.n = n;
                c.effect_size = e;
                out.push_back(c);
            }
        }
    }
    return out;
}

std::vector<SimulationConfig> study_grid(std::uint64_t seed, std::size_t reps) {
    return study_cells(kStudyM, seed, reps);
}

std::vector<SimulationConfig> study_tables_grid(std::uint64_t seed, std::size_t reps) {
    return study_cells(kStudyTablesM, seed, reps);
}

Invocation parse_config(std::span<const std::string> args) {
    CLI::App app{"Directional FDR of the BH step-up over all pairwise mean comparisons", "dirfdr"};

    SimulationConfig base;
    std::vector<std::size_t> ms{base.m};
    std::vector<std::size_t> ns{base.n};
    std::vector<double> effects{base.effect_size};
    std::string calibration = "normal";
    std::string format = "csv";
    Invocation inv;

    app.add_option("--m", ms, "Number of groups (comma-separated grid)")->delimiter(',');
    app.add_option("--n", ns, "Per-group sample size (comma-separated grid)")->delimiter(',');
    app.add_option("--effect-size", effects, "Sd of the group-mean law (comma-separated grid)")->delimiter(',');
    app.add_option("--alpha", base.alpha, "Nominal BH level")->capture_default_str();
    app.add_option("--reps", base.reps, "Replications per cell")->capture_default_str();
    app.add_option("--seed", base.seed, "Base seed")->capture_default_str();
    app.add_option("--calibration", calibration, "Reference distribution for p-values")
        ->check(CLI::IsMember({"normal", "t"}))
        ->capture_default_str();
    app.add_option("--error-df", base.error_df, "Degrees of freedom of the t error terms")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "markdown"}))->capture_default_str();
    app.add_option("--out", inv.out_path, "Write output to this path instead of standard output");
    app.add_option("--workers", inv.workers, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_flag("--study-tables", inv.study_tables,
                 "Run the full study grid (m also 20) and print both tables as markdown");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    base.calibration = calibration == "t" ? CalibrationPolicy::student_t : CalibrationPolicy::normal;
    inv.format = format == "markdown" ? OutputFormat::markdown : OutputFormat::csv;
    if (inv.study_tables) {
        inv.format = OutputFormat::markdown;
        ms.assign(std::begin(kStudyTablesM), std::end(kStudyTablesM));
        ns.assign(std::begin(kStudyN), std::end(kStudyN));
        effects.assign(std::begin(kStudyEffects), std::end(kStudyEffects));
    }
    inv.configs = expand_grid(ms, ns, effects, base);
    if (inv.configs.empty()) throw UsageError("empty configuration grid");
    try {
        for (const auto& c : inv.configs) c.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return inv;
}

Invocation parse_config(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return parse_config(args);
}

std::string format_csv(std::span<const CellResult> cells) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& c : cells) {
        const auto& cfg = c.config;
        const auto& s = c.summary;
        fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", cfg.m, cfg.n,
                       cfg.effect_size, cfg.alpha, cfg.reps, cfg.seed, to_string(cfg.calibration), s.p_dfdp_le_bound,
                       s.p_se, s.dfdr_hat, s.dfdr_se, s.mean_rejections, c.mean_alpha_hat, c.threshold_bound_rate);
    }
    return out;
}

std::string format_markdown(std::span<const CellResult> cells) {
    std::vector<double> effects;
    for (const auto& c : cells) {
        if (std::find(effects.begin(), effects.end(), c.config.effect_size) == effects.end()) {
            effects.push_back(c.config.effect_size);
        }
    }
    std::sort(effects.begin(), effects.end());
    std::string out = "## Estimated P(dFDP <= alpha/2)\n\n";
    for (double e : effects) append_table(out, cells, e, true);
    out += "## Estimated dFDR\n\n";
    for (double e : effects) append_table(out, cells, e, false);
    return out;
}

std::string reproduce_study_tables(std::uint64_t seed, unsigned workers, std::size_t reps) {
    const auto configs = study_tables_grid(seed, reps);
    const auto cells = run_experiment(configs, workers);
    return format_markdown(cells);
}

int run_and_emit(const Invocation& inv, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        const auto cells = run_experiment(inv.configs, inv.workers);
        text = inv.format == OutputFormat::csv ? format_csv(cells) : format_markdown(cells);
    } catch (const std::exception& e) {
        err << "dirfdr: " << e.what() << '\n';
        return 1;
    }
    if (inv.out_path.empty()) {
        out << text;
        out.flush();
        if (!out) {
            err << "dirfdr: failed writing to standard output\n";
            return 1;
        }
        return 0;
    }
    std::ofstream file(inv.out_path, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
        err << "dirfdr: cannot write " << inv.out_path << '\n';
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_config(argc, argv);
    } catch (const HelpRequested& e) {
        out << e.what();
        return 0;
    } catch (const UsageError& e) {
        err << "dirfdr: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }
    return run_and_emit(inv, out, err);
}

} // namespace dirfdr::cli
