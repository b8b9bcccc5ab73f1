#pragma once

#include <cstdint>
#include <vector>

#include "arbc/linear_code.hpp"

namespace arbc {

// GF(2^m) with log/antilog tables over a fixed primitive polynomial per m,
// so field elements (and everything built from them) are reproducible.
class GFExtField {
public:
    explicit GFExtField(unsigned m);  // 3 <= m <= 10

    unsigned m() const { return m_; }
    unsigned order() const { return order_; }  // 2^m - 1
    uint32_t primitive_poly() const { return poly_; }

    uint32_t alpha_pow(unsigned i) const { return alog_[i % order_]; }
    unsigned log(uint32_t x) const;  // x != 0
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return alog_[(log_[a] + log_[b]) % order_];
    }

private:
    unsigned m_;
    unsigned order_;
    uint32_t poly_;
    std::vector<uint32_t> alog_;
    std::vector<unsigned> log_;
};

// Cyclotomic cosets of 2 mod 2^m-1 covering {1 .. 2^m-2}, each sorted,
// ordered by smallest element. (The coset {0} is left out.)
std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned m);

// Minimal polynomial of alpha^e over GF(2), bit i = coefficient of x^i.
uint64_t minimal_polynomial(const GFExtField& field, unsigned exponent);

// Generator polynomial of the narrow-sense binary BCH code of length 2^m-1
// and design distance 2t+1: lcm of minimal polynomials of alpha^1..alpha^2t.
uint64_t bch_generator_poly(unsigned m, unsigned t_design);

// The BCH code as a k x n generator of shifted copies of g(x).
LinearCode bch_build(unsigned m, unsigned t_design);

// polynomial helpers over GF(2), coefficients packed in a word
uint64_t polymul_gf2(uint64_t a, uint64_t b);
unsigned polydeg_gf2(uint64_t a);

} // namespace arbc
