#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ohg {

/// Fixed-width bit vector. Bit 0 is the most significant bit of word 0, so
/// lexicographic comparison of the word arrays orders bit vectors as binary
/// numbers read from bit 0.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static constexpr std::size_t word_count(std::size_t bits) {
        return (bits + kWordBits - 1) / kWordBits;
    }
    static constexpr Word mask(std::size_t i) {
        return Word{1} << (kWordBits - 1 - i % kWordBits);
    }

    std::size_t size() const noexcept { return size_; }
    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] & mask(i)) != 0; }
    void set(std::size_t i) { words_[i / kWordBits] |= mask(i); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~mask(i); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

    std::size_t count() const {
        std::size_t n = 0;
        for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    /// Clears every bit of this set that is set in `other`.
    Bitset& subtract(const Bitset& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= size_) return size_;
        std::size_t k = from / kWordBits;
        Word w = words_[k] & (~Word{0} >> (from % kWordBits));
        while (true) {
            if (w != 0) {
                std::size_t i = k * kWordBits + static_cast<std::size_t>(std::countl_zero(w));
                return i < size_ ? i : size_;
            }
            if (++k == words_.size()) return size_;
            w = words_[k];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = find_first(); i < size_; i = find_next(i + 1)) f(i);
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;
    friend auto operator<=>(const Bitset& a, const Bitset& b) {
        return a.words_ <=> b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace ohg
