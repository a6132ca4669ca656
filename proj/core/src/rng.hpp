#pragma once

#include <cmath>
#include <cstdint>

// Deterministic RNG primitives. Standard-library distributions are
// implementation-defined across toolchains, which would break the
// byte-identical output contract, so sampling is spelled out here.

namespace percell::detail {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from (seed, tag).
inline uint64_t mix_seed(uint64_t seed, uint64_t tag) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ull + (tag << 1));
    uint64_t a = splitmix64(s);
    uint64_t b = splitmix64(s);
    return a ^ (b >> 1);
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform on (0, 1]: 53-bit mantissa, never exactly zero so that
    // -log(u) stays finite.
    double next_open01() {
        return (double((next_u64() >> 11)) + 1.0) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double next_uniform(double lo, double hi) {
        double u = double(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool next_bernoulli(double p) {
        return double(next_u64() >> 11) * 0x1.0p-53 < p;
    }

    // Poisson count with arbitrary mean via exponential interarrival sums
    // (no exp(-mean) underflow at large means, exact distribution).
    long next_poisson(double mean) {
        if (mean <= 0.0) return 0;
        long n = 0;
        double acc = 0.0;
        for (;;) {
            acc += -std::log(next_open01());
            if (acc > mean) return n;
            ++n;
        }
    }

  private:
    uint64_t state_;
};

} // namespace percell::detail
