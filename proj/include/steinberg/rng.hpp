#pragma once

#include "steinberg/ring.hpp"

#include <cstdint>
#include <random>

namespace steinberg {

/// Seeded generator used by every randomized check. mt19937_64 output is
/// pinned by the standard, and we derive values from raw draws only, so a
/// fixed seed yields identical runs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (eng_() & 1u) != 0; }

    /// Spawns an independent stream (for per-case determinism that does not
    /// depend on evaluation order).
    Rng fork() { return Rng(eng_()); }

private:
    std::mt19937_64 eng_;
};

inline Scalar random_scalar(const RingSpec& ring, Rng& rng) {
    switch (ring.kind) {
        case RingKind::Integers:
            return scalar_of(ring, rng.range(-9, 9));
        case RingKind::ModN:
            return Scalar(ring, BigInt(rng.below(ring.modulus)));
        case RingKind::Rationals:
            return Scalar(ring, BigInt(rng.range(-9, 9)), BigInt(rng.range(1, 9)));
    }
    return Scalar(ring, 0);
}

inline Scalar random_nonzero_scalar(const RingSpec& ring, Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(ring, rng);
        if (!s.is_zero()) return s;
    }
}

} // namespace steinberg
