#include "dirfdr/sim_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "dirfdr/bh_directional.hpp"
#include "dirfdr/core_stats.hpp"
#include "dirfdr/errors.hpp"
#include "dirfdr/rng.hpp"

namespace dirfdr {

void SimulationConfig::validate() const {
    if (m < 2) throw ConfigError(fmt::format("m must be at least 2, got {}", m));
    if (n < 2) throw ConfigError(fmt::format("n must be at least 2, got {}", n));
    if (!(effect_size >= 0.0) || !std::isfinite(effect_size)) {
        throw ConfigError(fmt::format("effect size must be a finite nonnegative number, got {}", effect_size));
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError(fmt::format("alpha must lie in (0, 1), got {}", alpha));
    if (reps < 1) throw ConfigError("reps must be at least 1");
    if (error_df <= 2) {
        throw ConfigError(fmt::format("error df {} gives errors with infinite variance; need df > 2", error_df));
    }
    if (!std::isfinite(scale_mean) || !(scale_sd >= 0.0) || !std::isfinite(scale_sd)) {
        throw ConfigError("scale law needs a finite mean and a finite nonnegative sd");
    }
    if (scale_sd == 0.0 && !(scale_mean > 0.0)) {
        throw ConfigError("scale law with sd 0 needs a positive mean");
    }
}

Dataset generate_dataset(const SimulationConfig& config, std::size_t replication_index) {
    config.validate();
    Rng rng = Rng::for_stream(config.seed, replication_index);
    const std::size_t m = config.m;
    const double df = static_cast<double>(config.error_df);
    const double error_sd = std::sqrt(df / (df - 2.0));

    Dataset data;
    data.truth.means.resize(m);
    data.truth.scales.resize(m);
    data.truth.sizes.assign(m, config.n);
    for (auto& mu : data.truth.means) mu = config.effect_size * rng.normal();

    std::vector<double> rho(m);
    for (auto& r : rho) {
        double rho2 = rng.normal(config.scale_mean, config.scale_sd);
        while (rho2 <= 0.0) {
            ++data.scale_resamples;
            rho2 = rng.normal(config.scale_mean, config.scale_sd);
        }
        r = std::sqrt(rho2);
    }

    data.samples.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        data.truth.scales[i] = rho[i] * error_sd;
        auto& x = data.samples[i];
        x.resize(config.n);
        for (auto& v : x) v = data.truth.means[i] + rho[i] * rng.student_t(config.error_df);
    }
    return data;
}

ReplicationResult run_replication(const SimulationConfig& config, std::size_t replication_index) {
    const Dataset data = generate_dataset(config, replication_index);
    std::vector<GroupSummary> groups;
    groups.reserve(config.m);
    for (const auto& x : data.samples) groups.push_back(summarize_group(x));

    const DecisionSet decisions = williams_bh(groups, config.alpha, config.calibration);
    const PairPartition partition = classify_pairs(data.truth);

    ReplicationResult out;
    out.metrics = replication_metrics(decisions, partition);
    out.alpha_hat = decisions.threshold_alpha_hat;
    out.threshold_bound_ok = threshold_bound_indicator(decisions, config.m);
    out.seed_used = Rng::stream_key(config.seed, replication_index);
    out.scale_resamples = data.scale_resamples;
    return out;
}

std::vector<CellResult> run_experiment(std::span<const SimulationConfig> configs, unsigned workers) {
    if (configs.empty()) throw ConfigError("experiment needs at least one configuration");
    for (const auto& c : configs) c.validate();

    // Flat task list: (cell, replication) in cell-major order.
    std::vector<std::size_t> offsets(configs.size() + 1, 0);
    for (std::size_t c = 0; c < configs.size(); ++c) offsets[c + 1] = offsets[c] + configs[c].reps;
    const std::size_t total = offsets.back();
    std::vector<ReplicationResult> results(total);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t task = next.fetch_add(1); task < total; task = next.fetch_add(1)) {
            const auto cell = static_cast<std::size_t>(
                std::upper_bound(offsets.begin(), offsets.end(), task) - offsets.begin() - 1);
            try {
                results[task] = run_replication(configs[cell], task - offsets[cell]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(total);
            }
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CellResult> cells;
    cells.reserve(configs.size());
    std::vector<ReplicationMetrics> metrics;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto& cfg = configs[c];
        metrics.clear();
        double alpha_hat_sum = 0.0;
        double bound_ok = 0.0;
        std::size_t resamples = 0;
        for (std::size_t t = offsets[c]; t < offsets[c + 1]; ++t) {
            metrics.push_back(results[t].metrics);
            alpha_hat_sum += results[t].alpha_hat;
            bound_ok += results[t].threshold_bound_ok ? 1.0 : 0.0;
            resamples += results[t].scale_resamples;
        }
        const auto reps = static_cast<double>(cfg.reps);
        cells.push_back({cfg, aggregate_experiment(metrics, 0.5 * cfg.alpha), alpha_hat_sum / reps,
                         bound_ok / reps, resamples});
    }
    return cells;
}

} // namespace dirfdr
