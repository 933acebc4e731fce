#ifndef DIRFDR_TESTS_BH_ORACLE_HPP
#define DIRFDR_TESTS_BH_ORACLE_HPP

// Test-only reference for the step-up: enumerate every k and keep the largest that
// satisfies the sorted-cutoff condition. Independent of bh_stepup's scan and tie handling.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

namespace dirfdr::test_support {

struct OracleResult {
    std::size_t k_hat = 0;
    std::vector<bool> rejected;
};

inline OracleResult brute_force_stepup(const std::vector<double>& p, double alpha) {
    const std::size_t q = p.size();
    std::vector<double> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    OracleResult out;
    for (std::size_t k = 1; k <= q; ++k) {
        if (sorted[k - 1] <= alpha * static_cast<double>(k) / static_cast<double>(q)) out.k_hat = k;
    }
    out.rejected.assign(q, false);
    if (out.k_hat > 0) {
        for (std::size_t idx = 0; idx < q; ++idx) out.rejected[idx] = p[idx] <= sorted[out.k_hat - 1];
    }
    return out;
}

/// Length 1..8 vectors mixing uniforms, a few point masses (ties) and exact step-up cutoffs.
inline std::vector<double> random_pvector(std::mt19937_64& gen, double alpha) {
    std::uniform_int_distribution<std::size_t> len(1, 8);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_real_distribution<double> small(0.0, alpha);
    std::uniform_int_distribution<int> kind(0, 5);
    const std::size_t q = len(gen);
    const double atoms[] = {0.0, 0.01, 0.05, 0.1, 1.0};
    std::vector<double> p(q);
    for (auto& v : p) {
        switch (kind(gen)) {
        case 0: v = unif(gen); break;
        case 1: v = small(gen); break;
        case 2: v = atoms[std::uniform_int_distribution<int>(0, 4)(gen)]; break;
        case 3: v = alpha * static_cast<double>(std::uniform_int_distribution<std::size_t>(1, q)(gen)) /
                    static_cast<double>(q); break;
        default: v = small(gen) * 0.5; break;
        }
    }
    // Duplicate an entry now and then to force ties.
    if (q > 1 && unif(gen) < 0.3) p[q - 1] = p[0];
    return p;
}

} // namespace dirfdr::test_support

#endif // DIRFDR_TESTS_BH_ORACLE_HPP
