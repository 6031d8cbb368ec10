#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "semirank/errors.hpp"

namespace semirank {

/// Fixed-length vector over {0,1}, bit-packed into 64-bit words.
///
/// Bit i lives in word i/64 at position i%64.  Unused tail bits of the last
/// word are kept zero so that whole-word operations (OR, AND, domination,
/// comparison, hashing) never need per-bit masking.
class BoolVector {
public:
    BoolVector() = default;

    explicit BoolVector(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    /// Convenience builder, mostly for tests: BoolVector::of({1,0,1}).
    static BoolVector of(std::initializer_list<int> bits) {
        BoolVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        if (i >= size_) throw BoundsError("BoolVector index out of range");
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        if (i >= size_) throw BoundsError("BoolVector index out of range");
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    BoolVector operator|(const BoolVector& other) const {
        check_same_size(other);
        BoolVector out(size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] = words_[k] | other.words_[k];
        return out;
    }

    BoolVector operator&(const BoolVector& other) const {
        check_same_size(other);
        BoolVector out(size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] = words_[k] & other.words_[k];
        return out;
    }

    BoolVector operator^(const BoolVector& other) const {
        check_same_size(other);
        BoolVector out(size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] = words_[k] ^ other.words_[k];
        return out;
    }

    BoolVector& operator|=(const BoolVector& other) {
        check_same_size(other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    BoolVector& operator^=(const BoolVector& other) {
        check_same_size(other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return *this;
    }

    bool operator==(const BoolVector& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    bool operator!=(const BoolVector& other) const { return !(*this == other); }

    /// Lexicographic order on the bit sequence, index 0 first, 0 < 1.
    bool operator<(const BoolVector& other) const {
        if (size_ != other.size_)
            throw ShapeError("BoolVector comparison requires equal lengths");
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t diff = words_[k] ^ other.words_[k];
            if (diff) {
                int bit = std::countr_zero(diff);
                return ((words_[k] >> bit) & 1u) == 0;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ size_;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Direct word write used by the matrix row accessors; the caller is
    /// responsible for keeping the tail bits zero.
    std::vector<std::uint64_t>& mutable_words() { return words_; }

private:
    void check_same_size(const BoolVector& other) const {
        if (size_ != other.size_)
            throw ShapeError("BoolVector length mismatch: " + std::to_string(size_) +
                             " vs " + std::to_string(other.size_));
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// True when x <= y entrywise: every 1 of x is also a 1 of y.
inline bool dominates(const BoolVector& x, const BoolVector& y) {
    if (x.size() != y.size())
        throw ShapeError("domination requires equal lengths");
    const auto& xw = x.words();
    const auto& yw = y.words();
    for (std::size_t k = 0; k < xw.size(); ++k)
        if (xw[k] & ~yw[k]) return false;
    return true;
}

struct BoolVectorHash {
    std::size_t operator()(const BoolVector& v) const { return v.hash(); }
};

} // namespace semirank
