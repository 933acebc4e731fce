#ifndef DIRFDR_RNG_HPP
#define DIRFDR_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace dirfdr {

/// SplitMix64 step; used for seeding and for deriving stream keys.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** with normal and Student t variates.
///
/// Streams are keyed by (seed, stream index): the 256-bit state is filled from a
/// SplitMix64 sequence started at a mix of both, so every replication owns an
/// independent, reproducible stream regardless of which thread runs it.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& s : state_) s = splitmix64(sm);
    }

    static std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept {
        std::uint64_t a = seed;
        const std::uint64_t h = splitmix64(a);
        std::uint64_t b = h ^ (stream * 0xD1B54A32D192ED03ULL);
        return splitmix64(b);
    }

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
        return Rng(stream_key(seed, stream));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Standard normal by the Marsaglia polar method.
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double normal(double mean, double sd) noexcept { return mean + sd * normal(); }

    /// Student t with integer df as Z / sqrt(chi2_df / df), chi2 built from df squared normals.
    double student_t(unsigned df) noexcept {
        const double z = normal();
        double chi2 = 0.0;
        for (unsigned k = 0; k < df; ++k) {
            const double w = normal();
            chi2 += w * w;
        }
        return z / std::sqrt(chi2 / static_cast<double>(df));
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace dirfdr

#endif // DIRFDR_RNG_HPP
