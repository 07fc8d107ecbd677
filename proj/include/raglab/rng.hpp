#pragma once

#include <cstdint>
#include <random>

namespace raglab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/**
 * Deterministic random stream: std::mt19937_64 (bit-exact across platforms)
 * with in-house output conversions, so that uniform/normal draws are
 * reproducible independent of the standard library implementation.
 *
 * Stream derivation: stream i of master seed s is seeded with
 * splitmix64(s ^ splitmix64(i + 1)). Trial k of an experiment always uses
 * stream k, so enlarging the trial count never perturbs earlier trials.
 */
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    static RngStream for_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
        return RngStream(splitmix64(master_seed ^ splitmix64(stream_id + 1)));
    }

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() { return double(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bernoulli(double p) { return next_unit() < p; }

    /// Standard normal via Box-Muller (fixed choice for reproducibility).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = next_unit();
        } while (u1 <= 0.0);
        u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace raglab
