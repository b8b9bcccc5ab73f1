#include "arbc/bch.hpp"

#include <algorithm>

namespace arbc {

namespace {

// primitive polynomials, one fixed choice per extension degree
constexpr uint32_t kPrimitive[11] = {
    0, 0, 0,
    0b1011,         // m=3
    0b10011,        // m=4
    0b100101,       // m=5
    0b1000011,      // m=6
    0b10001001,     // m=7
    0b100011101,    // m=8
    0b1000010001,   // m=9
    0b10000001001,  // m=10
};

} // namespace

GFExtField::GFExtField(unsigned m) : m_(m) {
    if (m < 3 || m > 10) throw InvalidParameter("field degree must be in [3, 10]");
    order_ = (1u << m) - 1;
    poly_ = kPrimitive[m];
    alog_.resize(order_);
    log_.assign(1u << m, 0);
    uint32_t x = 1;
    for (unsigned i = 0; i < order_; ++i) {
        alog_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x >> m) x ^= poly_;
    }
    if (x != 1) throw InvalidParameter("polynomial is not primitive");
}

unsigned GFExtField::log(uint32_t x) const {
    if (x == 0 || x > order_) throw InvalidParameter("log of zero or out-of-field element");
    return log_[x];
}

std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned m) {
    unsigned n = (1u << m) - 1;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned s = 1; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<unsigned> coset;
        unsigned x = s;
        do {
            seen[x] = true;
            coset.push_back(x);
            x = (2 * x) % n;
        } while (x != s);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

unsigned polydeg_gf2(uint64_t a) {
    if (a == 0) throw InvalidParameter("degree of zero polynomial");
    return 63u - unsigned(std::countl_zero(a));
}

uint64_t polymul_gf2(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (polydeg_gf2(a) + polydeg_gf2(b) > 63)
        throw DimensionTooLarge("polynomial product exceeds 64 coefficients");
    uint64_t r = 0;
    while (b) {
        unsigned i = std::countr_zero(b);
        b &= b - 1;
        r ^= a << i;
    }
    return r;
}

uint64_t minimal_polynomial(const GFExtField& field, unsigned exponent) {
    unsigned n = field.order();
    // the cyclotomic coset of the exponent gives the conjugate roots
    std::vector<unsigned> roots;
    unsigned x = exponent % n;
    do {
        roots.push_back(x);
        x = (2 * x) % n;
    } while (x != exponent % n);

    // expand prod (X + alpha^r) with coefficients in GF(2^m)
    std::vector<uint32_t> coeff{1};  // constant polynomial 1
    for (unsigned r : roots) {
        std::vector<uint32_t> next(coeff.size() + 1, 0);
        uint32_t a = field.alpha_pow(r);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] ^= coeff[i];
            next[i] ^= field.mul(coeff[i], a);
        }
        coeff = std::move(next);
    }

    uint64_t out = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] > 1)
            throw InvalidParameter("minimal polynomial has a non-binary coefficient");
        if (coeff[i]) out |= uint64_t{1} << i;
    }
    return out;
}

uint64_t bch_generator_poly(unsigned m, unsigned t_design) {
    GFExtField field(m);
    unsigned n = field.order();
    if (t_design == 0 || 2 * t_design >= n)
        throw InvalidParameter("design distance out of range");

    std::vector<uint64_t> factors;
    for (unsigned e = 1; e <= 2 * t_design; ++e) {
        uint64_t mp = minimal_polynomial(field, e);
        if (std::find(factors.begin(), factors.end(), mp) == factors.end())
            factors.push_back(mp);
    }
    uint64_t g = 1;
    for (uint64_t f : factors) g = polymul_gf2(g, f);
    return g;
}

LinearCode bch_build(unsigned m, unsigned t_design) {
    uint64_t g = bch_generator_poly(m, t_design);
    unsigned n = (1u << m) - 1;
    unsigned deg = polydeg_gf2(g);
    if (deg >= n) throw InvalidParameter("generator polynomial consumes the whole length");
    unsigned k = n - deg;
    BitMatrix gen(k, n);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j <= deg; ++j)
            if ((g >> j) & 1) gen.set(i, i + j, true);
    return LinearCode(std::move(gen));
}

} // namespace arbc
