#pragma once

// All randomness flows through this wrapper: a seeded std::mt19937_64 plus
// our own bounded-draw and shuffle so streams are identical across platforms
// and standard libraries. Parallel code derives one stream per replica as
// seed XOR replica-index and merges results in a fixed order, which keeps
// every result independent of the thread count.

#include <cstdint>
#include <random>
#include <vector>

namespace fireline {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static Rng replica(std::uint64_t seed, std::uint64_t index) {
        return Rng(seed ^ index);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace fireline
