#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace hessberg {

// Fixed-width bitset over dense root ids. 512 bits covers the full root set
// of every supported type (E8 has 480 roots). All hot loops in the library
// reduce to intersections, unions and subset tests on these.
class RootSet {
public:
    static constexpr int kWords = 8;
    static constexpr int kBits = kWords * 64;

    constexpr RootSet() : w_{} {}

    void set(int i) { w_[word(i)] |= bit(i); }
    void reset(int i) { w_[word(i)] &= ~bit(i); }
    bool test(int i) const { return (w_[word(i)] & bit(i)) != 0; }

    int count() const {
        int n = 0;
        for (auto w : w_) n += std::popcount(w);
        return n;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit at position >= from, or -1. Usage:
    //   for (int i = s.next(0); i != -1; i = s.next(i + 1)) ...
    int next(int from) const {
        if (from >= kBits) return -1;
        int wi = word(from);
        std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (from & 63));
        for (;;) {
            if (cur) return wi * 64 + std::countr_zero(cur);
            if (++wi == kWords) return -1;
            cur = w_[wi];
        }
    }

    RootSet& operator&=(const RootSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    RootSet& operator|=(const RootSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    RootSet& operator^=(const RootSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator^(RootSet a, const RootSet& b) { return a ^= b; }

    // Set difference: bits of *this not in o.
    RootSet minus(const RootSet& o) const {
        RootSet r = *this;
        for (int i = 0; i < kWords; ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    bool is_subset_of(const RootSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const RootSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const RootSet&) const = default;

    // Numeric comparison of the underlying bits, used for deterministic
    // orderings (smaller value = earlier).
    static int compare_value(const RootSet& a, const RootSet& b) {
        for (int i = kWords - 1; i >= 0; --i) {
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
        }
        return 0;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : w_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

    // Bits [0, n) all set.
    static RootSet first_n(int n) {
        RootSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

private:
    static int word(int i) { return i >> 6; }
    static std::uint64_t bit(int i) { return std::uint64_t(1) << (i & 63); }

    std::array<std::uint64_t, kWords> w_;
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

}  // namespace hessberg
