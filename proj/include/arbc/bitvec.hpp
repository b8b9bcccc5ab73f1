#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbc/errors.hpp"

namespace arbc {

// Dense vector over GF(2), packed LSB-first into 64-bit words.
// Unused bits of the last word are kept zero so that weight(), == and
// hex serialization never have to mask.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_(words_for(len), 0) {}

    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        check_index(i);
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) {
        check_index(i);
        w_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t x : w_) w += std::popcount(x);
        return w;
    }
    bool is_zero() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }

    // addition over GF(2)
    BitVector& operator^=(const BitVector& o) {
        if (len_ != o.len_) throw DimensionMismatch("vector length mismatch in xor");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    bool operator==(const BitVector&) const = default;

    bool dot(const BitVector& o) const {
        if (len_ != o.len_) throw DimensionMismatch("vector length mismatch in dot");
        uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1u;
    }

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    // bits as a 0/1 string, lowest index first (debug / CLI display)
    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

    std::string to_hex() const;
    static BitVector from_hex(std::size_t len, std::string_view hex);

    static std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw IndexOutOfRange("bit index " + std::to_string(i) +
                                             " out of range for length " + std::to_string(len_));
    }

    std::size_t len_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace arbc
