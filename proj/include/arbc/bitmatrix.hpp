#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbc/bitvec.hpp"
#include "arbc/errors.hpp"

namespace arbc {

// Strictly increasing set of column (or coordinate) indices.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> sorted) : idx_(std::move(sorted)) {
        for (std::size_t i = 1; i < idx_.size(); ++i)
            if (idx_[i - 1] >= idx_[i])
                throw InvalidParameter("index set must be strictly increasing");
    }
    static IndexSet first(std::size_t k) {
        std::vector<std::size_t> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = i;
        return IndexSet(std::move(v));
    }

    std::size_t size() const { return idx_.size(); }
    std::size_t operator[](std::size_t i) const { return idx_[i]; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<std::size_t>& values() const { return idx_; }
    bool contains(std::size_t x) const {
        for (auto v : idx_) { if (v == x) return true; if (v > x) break; }
        return false;
    }
    bool operator==(const IndexSet&) const = default;

private:
    std::vector<std::size_t> idx_;
};

// Dense matrix over GF(2); each row is packed LSB-first into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(BitVector::words_for(cols)),
          w_(rows * wpr_, 0) {}

    // rows given as 0/1 strings, e.g. {"101", "011"}
    static BitMatrix from_rows(std::initializer_list<const char*> rows);
    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        check(r, c);
        uint64_t m = uint64_t{1} << (c & 63);
        if (v) w_[r * wpr_ + (c >> 6)] |= m; else w_[r * wpr_ + (c >> 6)] &= ~m;
    }
    void flip(std::size_t r, std::size_t c) {
        check(r, c);
        w_[r * wpr_ + (c >> 6)] ^= uint64_t{1} << (c & 63);
    }

    std::span<const uint64_t> row_words(std::size_t r) const {
        return {w_.data() + r * wpr_, wpr_};
    }
    std::span<uint64_t> row_words(std::size_t r) {
        return {w_.data() + r * wpr_, wpr_};
    }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        auto src = row_words(r);
        auto dst = v.words();
        for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
        return v;
    }
    void set_row(std::size_t r, const BitVector& v) {
        if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
        auto src = v.words();
        auto dst = row_words(r);
        for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
    }

    void xor_row(std::size_t dst, std::size_t src) {
        auto d = row_words(dst);
        auto s = row_words(src);
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        auto ra = row_words(a);
        auto rb = row_words(b);
        for (std::size_t i = 0; i < wpr_; ++i) std::swap(ra[i], rb[i]);
    }

    BitMatrix& operator^=(const BitMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shape mismatch in xor");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { a ^= b; return a; }

    bool operator==(const BitMatrix&) const = default;

    bool is_zero() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }

    BitMatrix transpose() const;

    std::string to_string() const;  // one 0/1 string per line

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw IndexOutOfRange("matrix index (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") out of range for " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

// --- core operations ------------------------------------------------------

// row-major product a (r x m) * b (m x c)
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

// row vector times matrix
BitVector vec_mul(const BitVector& v, const BitMatrix& m);

// matrix times column vector (v as column), returns length rows()
BitVector mul_vec(const BitMatrix& m, const BitVector& v);

std::size_t rank(BitMatrix a);  // consumes a working copy

// Reduced row echelon form.
struct Rref {
    BitMatrix m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};
Rref rref(BitMatrix a);

BitMatrix inverse(const BitMatrix& a);                 // throws SingularMatrix
std::optional<BitMatrix> try_inverse(const BitMatrix& a);

// Basis of {x : x a = 0} as rows of a (rows()-rank) x rows() matrix.
BitMatrix left_kernel(const BitMatrix& a);
// Basis of {x : a x^T = 0} as rows of a (cols()-rank) x cols() matrix.
BitMatrix right_kernel(const BitMatrix& a);

BitMatrix select_columns(const BitMatrix& a, const IndexSet& cols);
BitVector select_coords(const BitVector& v, const IndexSet& coords);

// columns NOT in the given set, in increasing order
IndexSet complement(const IndexSet& s, std::size_t n);

} // namespace arbc
