#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace mdim {

/// Fixed-width dynamic bitset over 64-bit words. Used for adjacency rows and
/// for the solvers' pair-coverage masks, which routinely exceed 64 bits.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits)
        : bits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

    int size() const { return bits_; }

    void set(int i) {
        assert(i >= 0 && i < bits_);
        words_[static_cast<std::size_t>(i >> 6)] |= word_bit(i);
    }
    void reset(int i) {
        assert(i >= 0 && i < bits_);
        words_[static_cast<std::size_t>(i >> 6)] &= ~word_bit(i);
    }
    bool test(int i) const {
        assert(i >= 0 && i < bits_);
        return (words_[static_cast<std::size_t>(i >> 6)] & word_bit(i)) != 0;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// True when every one of the first size() bits is set.
    bool all() const {
        if (bits_ == 0) return true;
        const std::size_t full_words = static_cast<std::size_t>(bits_ >> 6);
        for (std::size_t i = 0; i < full_words; ++i)
            if (words_[i] != ~std::uint64_t{0}) return false;
        const int tail = bits_ & 63;
        if (tail != 0) {
            const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
            if ((words_.back() & mask) != mask) return false;
        }
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Clears every bit that is set in o.
    Bitset& subtract(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const = default;

    bool intersects(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Index of the lowest set bit, or -1.
    int find_first() const { return find_from(0); }

    /// Index of the lowest set bit >= from, or -1.
    int find_from(int from) const {
        if (from >= bits_) return -1;
        std::size_t wi = static_cast<std::size_t>(from >> 6);
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(wi << 6) + std::countr_zero(w);
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = find_first(); i != -1; i = find_from(i + 1)) f(i);
    }

private:
    static std::uint64_t word_bit(int i) {
        return std::uint64_t{1} << (i & 63);
    }

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mdim
