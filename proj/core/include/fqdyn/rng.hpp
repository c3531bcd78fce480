#pragma once

#include <cstdint>
#include <random>

namespace fqdyn {

/// Seedable pseudorandom source. Every randomized routine takes one of these
/// so factorizations and generated test data are reproducible run to run.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(eng_);
    }

    long long range(long long lo, long long hi) {  // inclusive bounds
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(eng_);
    }

    bool coin() { return (next() & 1u) != 0; }

   private:
    std::mt19937_64 eng_;
};

}  // namespace fqdyn
