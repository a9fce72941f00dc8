#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lrw {

// Fixed-width bitset, sized at construction, packed into 64-bit words.
// All binary operations require operands of equal width.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    static Bitset of(int bits, std::initializer_list<int> ones) {
        Bitset b(bits);
        for (int i : ones) b.set(i);
        return b;
    }

    int size() const { return bits_; }

    bool test(int i) const {
        assert(0 <= i && i < bits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(0 <= i && i < bits_);
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(0 <= i && i < bits_);
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(int i) {
        assert(0 <= i && i < bits_);
        words_[i >> 6] ^= uint64_t(1) << (i & 63);
    }

    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Index of the lowest set bit, or -1.
    int find_first() const { return find_next(-1); }

    // Lowest set bit with index > i, or -1.
    int find_next(int i) const {
        int k = (i + 1) >> 6;
        if (i + 1 >= bits_ || k >= (int)words_.size()) return -1;
        uint64_t w = words_[k] & (~uint64_t(0) << ((i + 1) & 63));
        while (true) {
            if (w) return (k << 6) + std::countr_zero(w);
            if (++k == (int)words_.size()) return -1;
            w = words_[k];
        }
    }

    Bitset& operator^=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // this & ~o
    Bitset and_not(const Bitset& o) const {
        assert(bits_ == o.bits_);
        Bitset r(bits_);
        for (size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = find_first(); i >= 0; i = find_next(i)) v.push_back(i);
        return v;
    }

    uint64_t word(int k) const { return words_[k]; }

    bool operator==(const Bitset&) const = default;
    auto operator<=>(const Bitset&) const = default;

private:
    int bits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace lrw
