#ifndef ROLS_RNG_HPP
#define ROLS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace rols {

// Counter-based random number streams.
//
// Each stream is a splitmix64 walk over a 64-bit state whose starting point is
// a strong hash of (master seed, replication index, stream tag). Streams with
// different tags or replications are statistically independent, draws are
// reproducible bit-for-bit on any platform, and a stream can be reconstructed
// from its seed record alone. Normal variates use Box-Muller on explicitly
// constructed uniforms, so no implementation-defined std::distribution is
// involved anywhere.

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t hash_tag(std::string_view tag) {
    // FNV-1a folded through mix64.
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return mix64(h);
}

class RngStream {
public:
    explicit RngStream(std::uint64_t state) : state_(state) {}

    // Stream for (master seed, replication, named role).
    static RngStream derive(std::uint64_t master, std::uint64_t replication,
                            std::string_view tag) {
        std::uint64_t s = mix64(master + 0x9E3779B97F4A7C15ULL);
        s = mix64(s ^ hash_tag(tag));
        s = mix64(s ^ (replication + 0x9E3779B97F4A7C15ULL));
        return RngStream(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform on (0,1]: 53-bit mantissa, never zero (safe under log).
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Unbiased integer on [0, m), rejection sampled.
    std::uint64_t next_below(std::uint64_t m) {
        for (;;) {
            std::uint64_t u = next_u64();
            std::uint64_t r = u % m;
            if (u - r <= ~std::uint64_t{0} - (m - 1)) return r;
        }
    }

    // Standard normal, Box-Muller. One normal per two uniforms; the sine
    // partner is discarded so a draw depends only on the counter position.
    double next_normal() {
        double u1 = next_uniform();
        double u2 = (static_cast<double>(next_u64() >> 11)) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi_ * u2);
    }

private:
    static constexpr double kPi_ = 3.14159265358979323846;
    std::uint64_t state_;
};

// Seed bookkeeping carried inside generated samples.
struct SeedRecord {
    std::uint64_t master = 0;
    std::uint64_t replication = 0;
    // Salt folded into the {eps, eta} streams only; changing it must leave the
    // {mu, g, h} paths untouched (independence plumbing).
    std::uint64_t noise_salt = 0;
};

}  // namespace rols

#endif
