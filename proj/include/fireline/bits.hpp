#pragma once

// Fixed-width dynamic bitset keyed by vertex index. Game state lives in
// these; the exact solver uses a single-word fast path of its own.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fireline {

class DynBits {
public:
    DynBits() : n_(0) {}
    explicit DynBits(int n) : n_(n), w_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    void or_with(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }

    bool intersects(const DynBits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const DynBits& o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

} // namespace fireline
