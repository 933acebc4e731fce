#ifndef DIRFDR_CLI_HPP
#define DIRFDR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirfdr/sim_engine.hpp"

namespace dirfdr::cli {

enum class OutputFormat { csv, markdown };

/// Bad flags or out-of-domain values; the CLI exits with status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text and the CLI exits with status 0.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Invocation {
    std::vector<SimulationConfig> configs;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;   // empty: standard output
    unsigned workers = 0;   // 0: hardware concurrency
    bool study_tables = false;
};

inline constexpr const char* kCsvHeader =
    "m,n,effect_size,alpha,reps,seed,calibration,p_dfdp_le_bound,p_se,dfdr_hat,dfdr_se,"
    "mean_rejections,mean_alpha_hat,threshold_bound_rate";

/// Parses command-line flags, expanding comma-separated --m/--n/--effect-size
/// lists into their cross product (m outermost, effect size innermost).
Invocation parse_config(std::span<const std::string> args);
Invocation parse_config(int argc, const char* const* argv);

/// Cross product of the given grids with every other field taken from `base`.
std::vector<SimulationConfig> expand_grid(std::span<const std::size_t> ms, std::span<const std::size_t> ns,
                                          std::span<const double> effects, const SimulationConfig& base);

/// The 4 x 4 x 4 grid of the simulation study: m in {5,15,30,40}, n in {40,100,200,400},
/// effect size in {0.01,0.05,0.15,0.25}, 500 reps at alpha 0.2.
std::vector<SimulationConfig> study_grid(std::uint64_t seed, std::size_t reps = 500);

/// study_grid plus m = 20, so both the m = 20 and m = 30 rows are available.
std::vector<SimulationConfig> study_tables_grid(std::uint64_t seed, std::size_t reps = 500);

std::string format_csv(std::span<const CellResult> cells);

/// One m-by-n table per (effect size, quantity), values rounded to 2 decimals.
std::string format_markdown(std::span<const CellResult> cells);

/// Runs the study_tables_grid and renders both tables as markdown.
std::string reproduce_study_tables(std::uint64_t seed, unsigned workers = 0, std::size_t reps = 500);

/// Runs the configs and writes the formatted result to `out` or to inv.out_path.
/// Returns the process exit status; diagnostics go to `err`.
int run_and_emit(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Entry point behind the executable: parse, run, emit.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dirfdr::cli

#endif // DIRFDR_CLI_HPP
