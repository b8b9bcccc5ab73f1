#include "doctest.h"

#include <algorithm>
#include <set>

#include "arbc/bch.hpp"
#include "arbc/linear_code.hpp"
#include "arbc/spectrum.hpp"

using namespace arbc;

namespace {

// all codewords as sorted strings, for set comparison of small codes
std::set<std::string> codeword_set(const LinearCode& c) {
    std::set<std::string> out;
    for (uint64_t msg = 0; msg < (uint64_t{1} << c.k()); ++msg) {
        BitVector u(c.k());
        for (std::size_t i = 0; i < c.k(); ++i)
            if ((msg >> i) & 1) u.set(i, true);
        out.insert(c.encode(u).to_string());
    }
    return out;
}

// evaluate a binary codeword as a polynomial at alpha^e
uint32_t eval_at(const GFExtField& f, const BitVector& cw, unsigned e) {
    uint32_t acc = 0;
    for (std::size_t i = 0; i < cw.size(); ++i)
        if (cw.get(i)) acc ^= f.alpha_pow(unsigned(i) * e % f.order());
    return acc;
}

} // namespace

TEST_CASE("code from systematic generator") {
    LinearCode c(hamming74_generator());
    CHECK(c.n() == 7);
    CHECK(c.k() == 4);
    CHECK(c.info_set() == IndexSet::first(4));
    CHECK(mat_mul(c.generator(), c.parity_check().transpose()).is_zero());
    CHECK(c.parity_check().rows() == 3);
    CHECK(rank(c.parity_check()) == 3);
    // info-set inverse really inverts the selected block
    CHECK(mat_mul(select_columns(c.generator(), c.info_set()), c.info_set_inverse())
          == BitMatrix::identity(4));
}

TEST_CASE("information set skips dependent leading columns") {
    auto g = BitMatrix::from_rows({"0110", "0101"});
    CHECK(first_information_set(g) == IndexSet({1, 2}));
    LinearCode c(g);
    for (uint64_t m = 0; m < 4; ++m) {
        BitVector u(2);
        if (m & 1) u.set(0, true);
        if (m & 2) u.set(1, true);
        CHECK(c.solve_message(c.encode(u)) == u);
    }
    CHECK_THROWS_AS(LinearCode(BitMatrix::from_rows({"11", "11"})), RankDeficient);
    CHECK_THROWS_AS(LinearCode(hamming74_generator(), IndexSet({0, 1, 2, 3, 4})),
                    InvalidParameter);
}

TEST_CASE("scrambled generator spans the same code") {
    auto g = hamming74_generator();
    auto s = BitMatrix::from_rows({"1100", "0110", "0011", "0001"});
    REQUIRE(rank(s) == 4);
    LinearCode c1(g), c2(mat_mul(s, g));
    CHECK(codeword_set(c1) == codeword_set(c2));
}

TEST_CASE("encode basics") {
    LinearCode c(hamming74_generator());
    CHECK(c.encode(BitVector(4)).is_zero());
    for (std::size_t i = 0; i < 4; ++i) {
        BitVector u(4);
        u.set(i, true);
        CHECK(c.encode(u) == c.generator().row(i));
    }
    auto words = codeword_set(c);
    CHECK(words.size() == 16);  // injective
    CHECK_THROWS_AS(c.encode(BitVector(5)), DimensionMismatch);
}

TEST_CASE("syndrome separates cosets of single errors") {
    LinearCode c(hamming74_generator());
    BitVector cw = c.encode(BitVector::from_bits({1, 0, 1, 1}));
    CHECK(c.is_codeword(cw));
    CHECK(c.syndrome(cw).is_zero());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < 7; ++i) {
        BitVector e(7);
        e.set(i, true);
        auto s = c.syndrome(cw ^ e);
        CHECK_FALSE(s.is_zero());
        seen.insert(s.to_string());
    }
    CHECK(seen.size() == 7);  // distance 3: single-error syndromes all distinct
}

TEST_CASE("cyclotomic cosets mod 15") {
    auto cs = cyclotomic_cosets(4);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == std::vector<unsigned>{1, 2, 4, 8});
    CHECK(cs[1] == std::vector<unsigned>{3, 6, 9, 12});
    CHECK(cs[2] == std::vector<unsigned>{5, 10});
    CHECK(cs[3] == std::vector<unsigned>{7, 11, 13, 14});

    for (unsigned m = 3; m <= 8; ++m) {
        auto cosets = cyclotomic_cosets(m);
        unsigned n = (1u << m) - 1;
        std::set<unsigned> all;
        for (const auto& cs2 : cosets)
            for (unsigned x : cs2) {
                CHECK(all.insert(x).second);  // disjoint
                // closed under doubling
                CHECK(std::find(cs2.begin(), cs2.end(), 2 * x % n) != cs2.end());
            }
        CHECK(all.size() == n - 1);  // covers 1..n-1
    }
}

TEST_CASE("minimal polynomials over GF(16)") {
    GFExtField f(4);
    CHECK(minimal_polynomial(f, 0) == 0b11);      // x + 1
    CHECK(minimal_polynomial(f, 1) == 0b10011);   // the field polynomial itself
    CHECK(minimal_polynomial(f, 5) == 0b111);     // alpha^5 has order 3
    CHECK(minimal_polynomial(f, 2) == minimal_polynomial(f, 1));  // conjugates

    // product over coset representatives, times (x+1), is x^15 + 1
    uint64_t prod = 0b11;
    for (const auto& coset : cyclotomic_cosets(4))
        prod = polymul_gf2(prod, minimal_polynomial(f, coset[0]));
    CHECK(prod == ((uint64_t{1} << 15) | 1));
}

TEST_CASE("field arithmetic sanity") {
    GFExtField f(4);
    CHECK(f.order() == 15);
    CHECK(f.alpha_pow(0) == 1);
    CHECK(f.alpha_pow(15) == 1);
    CHECK(f.mul(0, 7) == 0);
    for (unsigned i = 1; i <= 15; ++i)
        CHECK(f.alpha_pow(f.log(i)) == i);
    // alpha^4 = alpha + 1 under x^4 + x + 1
    CHECK(f.alpha_pow(4) == 0b0011);
    CHECK_THROWS_AS(GFExtField(2), InvalidParameter);
    CHECK_THROWS_AS(GFExtField(11), InvalidParameter);
}

TEST_CASE("BCH generator polynomials") {
    CHECK(bch_generator_poly(4, 1) == 0b10011);
    CHECK(bch_generator_poly(4, 2) == 0b111010001);
    CHECK(bch_generator_poly(6, 7) ==
          0b1111011010011010110000100000100100100001ull);
    CHECK(bch_generator_poly(7, 9) ==
          0b110010101101000001000111001011010101011001010111111101011ull);
    CHECK_THROWS_AS(bch_generator_poly(4, 0), InvalidParameter);
    CHECK_THROWS_AS(bch_generator_poly(4, 8), InvalidParameter);
}

TEST_CASE("BCH codes have the right shape") {
    struct Case { unsigned m, t; std::size_t n, k; };
    for (auto [m, t, n, k] : {Case{4, 1, 15, 11}, Case{4, 2, 15, 7}, Case{4, 3, 15, 5},
                              Case{6, 7, 63, 24}, Case{7, 9, 127, 71}}) {
        LinearCode c = bch_build(m, t);
        CHECK(c.n() == n);
        CHECK(c.k() == k);
        CHECK(c.info_set() == IndexSet::first(k));
        CHECK(rank(c.generator()) == k);
    }
}

TEST_CASE("BCH codewords vanish at the designed roots") {
    GFExtField f(4);
    LinearCode c = bch_build(4, 2);
    for (uint64_t msg = 0; msg < 128; ++msg) {
        BitVector u(7);
        for (std::size_t i = 0; i < 7; ++i)
            if ((msg >> i) & 1) u.set(i, true);
        BitVector cw = c.encode(u);
        for (unsigned e = 1; e <= 4; ++e)
            CHECK(eval_at(f, cw, e) == 0);
    }
}

TEST_CASE("minimum distances") {
    CHECK(min_distance(LinearCode(hamming74_generator())) == 3);
    CHECK(min_distance(bch_build(4, 1)) == 3);
    CHECK(min_distance(bch_build(4, 2)) == 5);
    CHECK(min_distance(bch_build(4, 3)) == 7);
    CHECK(min_distance(bch_build(6, 7)) == 15);

    // cross-check the Gray-code walk against plain re-encoding
    LinearCode c = bch_build(4, 2);
    unsigned naive = 100;
    for (uint64_t msg = 1; msg < 128; ++msg) {
        BitVector u(7);
        for (std::size_t i = 0; i < 7; ++i)
            if ((msg >> i) & 1) u.set(i, true);
        naive = std::min(naive, unsigned(c.encode(u).weight()));
    }
    CHECK(min_distance(c) == naive);
}

TEST_CASE("weight spectrum, exact") {
    auto s = weight_spectrum(LinearCode(hamming74_generator()));
    CHECK(s.exact);
    CHECK(s.counts == std::vector<uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    CHECK(s.total() == 16);
    CHECK(s.min_positive_weight() == 3);
    CHECK(spectrum_table(s) == "0 1\n3 7\n4 7\n7 1\n");

    // repetition code
    auto rep = LinearCode(BitMatrix::from_rows({"11111"}));
    auto sr = weight_spectrum(rep);
    CHECK(sr.counts == std::vector<uint64_t>{1, 0, 0, 0, 0, 1});
}

TEST_CASE("weight spectrum of the (63,24) code") {
    auto s = weight_spectrum(bch_build(6, 7));
    CHECK(s.total() == uint64_t{1} << 24);
    CHECK(s.counts[0] == 1);
    for (unsigned w = 1; w < 15; ++w) CHECK(s.counts[w] == 0);
    CHECK(s.counts[15] == 651);
    // all-ones is a codeword, so the spectrum is symmetric
    CHECK(s.counts[63] == 1);
    for (unsigned w = 0; w <= 63; ++w) CHECK(s.counts[w] == s.counts[63 - w]);
}

TEST_CASE("exhaustive enumeration refuses oversized dimensions") {
    BitMatrix g(kMaxExhaustiveDim + 1, kMaxExhaustiveDim + 10);
    for (std::size_t i = 0; i < g.rows(); ++i) g.set(i, i, true);
    CHECK_THROWS_AS(weight_spectrum(LinearCode(g)), DimensionTooLarge);
    CHECK_THROWS_AS(min_distance(LinearCode(g)), DimensionTooLarge);
}

TEST_CASE("weight spectrum, sampled") {
    LinearCode c = bch_build(4, 2);
    auto exact = weight_spectrum(c);
    Rng rng(2024);
    auto approx = weight_spectrum_sampled(c, 10000, rng);
    CHECK_FALSE(approx.exact);
    CHECK(approx.sample_size == 10000);
    // scaled totals land near the true message count
    CHECK(approx.total() > 115);
    CHECK(approx.total() < 141);
    for (std::size_t w = 0; w <= 15; ++w) {
        if (exact.counts[w] >= 8) {
            double rel = double(approx.counts[w]) / double(exact.counts[w]);
            CHECK(rel > 0.5);
            CHECK(rel < 1.5);
        }
    }
}

TEST_CASE("Gilbert-Varshamov bound") {
    CHECK(gv_bound(7, 4) == 3);
    CHECK(gv_bound(15, 7) == 4);
    CHECK(gv_bound(15, 11) == 3);
    CHECK(gv_bound(63, 24) == 12);
    CHECK(gv_bound(63, 25) == 12);
    CHECK(gv_bound(63, 26) == 12);
    CHECK(gv_bound(63, 39) == 7);
    CHECK(gv_bound(10, 9) == 2);
    // more redundancy never hurts the bound
    for (std::size_t k = 2; k < 63; ++k)
        CHECK(gv_bound(63, k) >= gv_bound(63, k + 1));
}
