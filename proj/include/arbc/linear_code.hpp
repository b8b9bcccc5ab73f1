#pragma once

#include "arbc/bitmatrix.hpp"

namespace arbc {

// Binary [n, k] linear code held as a full-rank generator matrix plus a
// chosen information set J: k column positions where G restricted to J is
// invertible. Everything downstream (decryption, attacks) leans on J.
class LinearCode {
public:
    // picks the lexically first information set: scan columns left to right,
    // keep each column that grows the rank
    explicit LinearCode(BitMatrix generator);
    LinearCode(BitMatrix generator, IndexSet info_set);

    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }

    const BitMatrix& generator() const { return g_; }
    const BitMatrix& parity_check() const { return h_; }  // (n-k) x n, G H^T = 0
    const IndexSet& info_set() const { return j_; }
    const BitMatrix& info_set_inverse() const { return gj_inv_; }  // (G_J)^-1

    BitVector encode(const BitVector& u) const { return vec_mul(u, g_); }
    BitVector syndrome(const BitVector& v) const;  // v H^T, length n-k
    bool is_codeword(const BitVector& v) const { return syndrome(v).is_zero(); }

    // recover u from a codeword: u = c_J (G_J)^-1
    BitVector solve_message(const BitVector& codeword) const {
        return vec_mul(select_coords(codeword, j_), gj_inv_);
    }

private:
    void finish();  // computes gj_inv_ and h_

    BitMatrix g_;
    IndexSet j_;
    BitMatrix gj_inv_;
    BitMatrix h_;
};

// lexicographically first information set of a full-row-rank matrix
IndexSet first_information_set(const BitMatrix& g);

// [7,4] Hamming code in systematic form
BitMatrix hamming74_generator();

} // namespace arbc
