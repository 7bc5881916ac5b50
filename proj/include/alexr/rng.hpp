// Deterministic random source for the verification suites.  mt19937_64 is
// fully specified by the standard; bounded draws go through plain modulo so
// that identical (seed, config) inputs give byte-identical reports on every
// platform.

#pragma once

#include <cstdint>
#include <random>

namespace alexr {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed) {}

    uint64_t u64() { return eng(); }

    // Uniform-ish integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        if (hi < lo) return lo;
        return lo + static_cast<int>(u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool percent(int p) { return range(0, 99) < p; }
};

}  // namespace alexr
