#pragma once

#include <cstdint>
#include <vector>

namespace comformer {

// xorshift64* shift-register generator. Every random draw in the project
// (parameter init, shuffles, dropout, sampling) goes through this class so
// that a run is reproducible from its seed alone, on any platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed != 0 ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64() {
        uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    // Uniform in [0, 1), 53 bits of mantissa.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n == 0 returns 0.
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    // Fisher-Yates shuffle of an index permutation [0, n).
    std::vector<size_t> permutation(size_t n) {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = i;
        for (size_t i = n; i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

} // namespace comformer
