#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace flows {

using Vertex = int;

/// Dynamic bitset over a fixed universe 0..size-1. Doubles as a vertex set
/// and as a GF(2) vector.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_(word_count(size), 0) {}

    static Bitset of(int size, std::initializer_list<int> bits) {
        Bitset s(size);
        for (int b : bits) s.set(b);
        return s;
    }

    int size() const { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U;
    }
    void set(int i) {
        assert(i >= 0 && i < size_);
        words_[static_cast<std::size_t>(i) >> 6] |= bit(i);
    }
    void reset(int i) {
        assert(i >= 0 && i < size_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~bit(i);
    }
    void flip(int i) {
        assert(i >= 0 && i < size_);
        words_[static_cast<std::size_t>(i) >> 6] ^= bit(i);
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }
    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool operator==(const Bitset&) const = default;

    Bitset& operator&=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    /// this := this \ o
    Bitset& and_not(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    Bitset complement() const {
        Bitset r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool subset_of(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Lowest set bit, -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    static std::size_t word_count(int size) {
        return (static_cast<std::size_t>(size) + 63) / 64;
    }
    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }
    void trim() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;

}  // namespace flows
