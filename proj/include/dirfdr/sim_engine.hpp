#ifndef DIRFDR_SIM_ENGINE_HPP
#define DIRFDR_SIM_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dirfdr/calibration.hpp"
#include "dirfdr/truth_metrics.hpp"

namespace dirfdr {

/// One cell of the simulation study. Defaults reproduce the balanced t(6) design
/// with normal calibration at alpha = 0.2 and 500 replications.
struct SimulationConfig {
    std::size_t m = 5;
    std::size_t n = 40;
    double effect_size = 0.01;  // sd of the normal law of the group means; 0 gives a full null
    double alpha = 0.2;
    std::size_t reps = 500;
    std::uint64_t seed = 1;
    CalibrationPolicy calibration = CalibrationPolicy::normal;
    unsigned error_df = 6;
    double scale_mean = 1.0;    // rho_i^2 ~ N(scale_mean, scale_sd), redrawn until positive
    double scale_sd = 0.1;

    /// Throws ConfigError on any out-of-domain field (error_df <= 2 included).
    void validate() const;
};

struct Dataset {
    GroundTruth truth;
    std::vector<std::vector<double>> samples; // samples[i] holds group i
    std::size_t scale_resamples = 0;          // rho^2 draws rejected for being <= 0
};

struct ReplicationResult {
    ReplicationMetrics metrics;
    double alpha_hat = 0.0;
    bool threshold_bound_ok = false;
    std::uint64_t seed_used = 0;  // key of this replication's RNG stream
    std::size_t scale_resamples = 0;
};

struct CellResult {
    SimulationConfig config;
    ExperimentSummary summary;
    double mean_alpha_hat = 0.0;
    double threshold_bound_rate = 0.0;
    std::size_t scale_resamples = 0;
};

/// Means mu_i ~ N(0, effect_size), scales rho_i, and X_ki = mu_i + rho_i eps_ki with
/// t(error_df) errors. Deterministic in (config, replication_index).
Dataset generate_dataset(const SimulationConfig& config, std::size_t replication_index);

/// One pass of the full pipeline scored against the replication's own truth.
ReplicationResult run_replication(const SimulationConfig& config, std::size_t replication_index);

/// Runs every cell's replications on `workers` threads (0 = hardware concurrency) and
/// aggregates each cell with bound alpha/2. Output does not depend on `workers`.
std::vector<CellResult> run_experiment(std::span<const SimulationConfig> configs, unsigned workers = 0);

} // namespace dirfdr

#endif // DIRFDR_SIM_ENGINE_HPP
