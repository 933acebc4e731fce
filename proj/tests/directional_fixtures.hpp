#ifndef DIRFDR_TESTS_DIRECTIONAL_FIXTURES_HPP
#define DIRFDR_TESTS_DIRECTIONAL_FIXTURES_HPP

// Hand-built decision/truth pairs with directional error counts worked out clause by clause.

#include <string>
#include <vector>

#include "dirfdr/core_stats.hpp"
#include "dirfdr/truth_metrics.hpp"

namespace dirfdr::test_support {

struct Rejection {
    std::size_t i;
    std::size_t j;
    Sign sign;
};

struct DirectionalCase {
    std::string name;
    std::vector<double> means;
    std::vector<Rejection> rejections;
    std::size_t expected_v;
    std::size_t expected_r;
};

inline GroundTruth truth_for(const std::vector<double>& means) {
    return {means, std::vector<double>(means.size(), 1.0), std::vector<std::size_t>(means.size(), 10)};
}

inline DecisionSet decisions_for(std::size_t m, const std::vector<Rejection>& rejections) {
    DecisionSet d;
    d.alpha = 0.2;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) d.decisions.push_back({i, j, false, Sign::none});
    }
    for (const auto& r : rejections) {
        auto& x = d.decisions[pair_index(r.i, r.j, m)];
        x.rejected = true;
        x.sign = r.sign;
    }
    d.k_hat = rejections.size();
    return d;
}

// means (1, 0, 0, 2): (0,1)+ (0,2)+ (0,3)- (1,2)0 (1,3)- (2,3)-
inline std::vector<DirectionalCase> directional_cases() {
    const std::vector<double> mu{1, 0, 0, 2};
    const auto P = Sign::positive;
    const auto N = Sign::negative;
    return {
        {"no rejections", mu, {}, 0, 0},
        {"null pair rejected, positive", mu, {{1, 2, P}}, 1, 1},
        {"null pair rejected, negative", mu, {{1, 2, N}}, 1, 1},
        {"H+ declared positive", mu, {{0, 1, P}}, 0, 1},
        {"H+ declared negative", mu, {{0, 1, N}}, 1, 1},
        {"H- declared negative", mu, {{0, 3, N}}, 0, 1},
        {"H- declared positive", mu, {{0, 3, P}}, 1, 1},
        {"null and correct H+", mu, {{1, 2, P}, {0, 1, P}}, 1, 2},
        {"all rejected, correct signs", mu,
         {{0, 1, P}, {0, 2, P}, {0, 3, N}, {1, 2, P}, {1, 3, N}, {2, 3, N}}, 1, 6},
        {"all rejected, flipped signs", mu,
         {{0, 1, N}, {0, 2, N}, {0, 3, P}, {1, 2, N}, {1, 3, P}, {2, 3, P}}, 6, 6},
        {"two wrong of three", mu, {{0, 1, P}, {0, 2, N}, {1, 3, P}}, 2, 3},
        {"full null, everything rejected", {5, 5, 5}, {{0, 1, P}, {0, 2, N}, {1, 2, P}}, 3, 3},
    };
}

} // namespace dirfdr::test_support

#endif // DIRFDR_TESTS_DIRECTIONAL_FIXTURES_HPP
