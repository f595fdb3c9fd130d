#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "unimat/int_mat.hpp"

namespace unimat {

/// PRNG scheme fixed for this release: child streams are derived with a
/// splitmix64-style mix, the stream itself is std::mt19937_64, and bounded
/// draws use rejection sampling (no std:: distributions, which are not
/// pinned by the standard).
inline constexpr const char* kRngScheme = "splitmix-derive/mt19937_64/rejection/v1";

/// Seed + scheme name. Identical seed and scheme => identical sample stream.
struct RngSpec {
    std::uint64_t seed = 0;
    std::string scheme = kRngScheme;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    explicit Rng(const RngSpec& spec) : Rng(spec.seed) {
        if (spec.scheme != kRngScheme)
            throw InvalidParams("Rng: unknown scheme '" + spec.scheme + "'");
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, bound), bound >= 1; unbiased via rejection.
    Int below(const Int& bound);

    /// Uniform on [-lambda, lambda].
    Int signed_range(const Int& lambda) { return below(2 * lambda + 1) - lambda; }

    /// Stateless child-seed derivation; O(1) in index.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace unimat
