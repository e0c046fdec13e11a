#pragma once

#include "a3dp/integers.hpp"

namespace a3dp {

// Counter-based generator: sample i reads words mix(seed + k*GOLDEN) for
// fixed counters k derived from i, so a run is reproducible bit-for-bit for a
// given (seed, sample count) no matter how the samples are partitioned
// across workers.
struct CounterRng {
    u64 seed;

    static u64 mix(u64 z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    u64 word(u64 counter) const { return mix(seed + counter * 0x9e3779b97f4a7c15ULL); }

    // Uniform in [0, 1).
    double uniform(u64 counter) const { return (word(counter) >> 11) * 0x1.0p-53; }
};

struct McResult {
    double value = 0;
    double std_error = 0;
    i64 samples = 0;
    u64 seed = 0;
};

}  // namespace a3dp
