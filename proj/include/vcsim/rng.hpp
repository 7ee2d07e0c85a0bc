#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace vcsim {

// Deterministic random source. All distributions are implemented by hand on
// top of mt19937_64 so that a given seed yields the same draw sequence on any
// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Box-Muller, cosine branch only.
    double normal(double mean, double stddev);

    // Mean 1/rate. rate must be > 0.
    double exponential(double rate);

private:
    std::mt19937_64 gen_;
};

// One master seed fanned out into independently-seeded substreams, keyed by
// name. Drawing from one substream never perturbs another, so e.g. swapping
// the scheduler leaves workload draws untouched.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    Rng substream(std::string_view name) const;

private:
    std::uint64_t seed_;
};

} // namespace vcsim
