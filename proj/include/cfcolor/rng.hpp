#pragma once

#include <cstdint>

namespace cfcolor {

// Counter-based generator: the n-th output is a pure function of
// (seed, stream, n). Draws replay bit-for-bit on every platform, and a
// stream can be forked without consuming state from its parent.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();

    // Uniform in [0, bound), bound >= 1, free of modulo bias.
    std::uint64_t next_below(std::uint64_t bound);

    // Uniform in [lo, hi], inclusive.
    long long next_int(long long lo, long long hi);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace cfcolor
