#ifndef STRATA_PRNG_HPP
#define STRATA_PRNG_HPP

#include <cstdint>

namespace strata {

/// splitmix64 — small, seedable, platform-independent.  Seeded runs must be
/// bit-reproducible everywhere, so the standard <random> distributions are
/// not used.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] (inclusive).
    long long range(long long lo, long long hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

private:
    uint64_t state_;
};

} // namespace strata

#endif
