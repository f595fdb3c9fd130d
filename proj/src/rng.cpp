#include "unimat/rng.hpp"

namespace unimat {

Int Rng::below(const Int& bound) {
    if (bound <= 0) throw InvalidParams("Rng::below: bound must be >= 1");
    if (bound == 1) return 0;

    if (bound.fits_ulong_p()) {
        std::uint64_t b = bound.get_ui();
        // values >= 2^64 mod b give exactly floor(2^64/b) full copies of [0,b)
        std::uint64_t threshold = (-b) % b;
        for (;;) {
            std::uint64_t u = next_u64();
            if (u >= threshold) return Int(static_cast<unsigned long>(u % b));
        }
    }

    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
    std::uint64_t top_mask =
        (top_bits == 64) ? ~0ULL : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        Int x = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t chunk = next_u64();
            if (w == 0) chunk &= top_mask;
            x <<= 64;
            x += Int(static_cast<unsigned long>(chunk));
        }
        if (x < bound) return x;
    }
}

}  // namespace unimat
