#pragma once

#include <cstdint>
#include <vector>

namespace drg {

// Fixed-width bit set over 64-bit words; the adjacency-row workhorse.
// Hot paths are intersection popcounts, so those avoid temporaries.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((static_cast<size_t>(nbits) + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    void or_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void and_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void andnot_with(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }

    static int and_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        for (size_t i = 0; i < a.w_.size(); ++i)
            c += __builtin_popcountll(a.w_[i] & b.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool none() const {
        for (std::uint64_t x : w_)
            if (x) return false;
        return true;
    }

    /// Index of the lowest set bit, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + static_cast<size_t>(__builtin_ctzll(w_[i])));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(static_cast<int>(i * 64 + static_cast<size_t>(__builtin_ctzll(x))));
                x &= x - 1;
            }
        }
    }

    bool operator==(const Bitset&) const = default;

  private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace drg
