#include "arbc/bigint.hpp"

#include <cmath>

#include "arbc/errors.hpp"

namespace arbc {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);  // exact: r is always a binomial coefficient
    }
    return r;
}

double log2_big(const BigInt& x) {
    if (x <= 0) throw InvalidParameter("log2 of non-positive value");
    std::size_t bits = boost::multiprecision::msb(x);  // floor(log2 x)
    if (bits <= 52) return std::log2(x.convert_to<double>());
    // keep the top 53 bits for the mantissa, add back the shifted-out exponent
    BigInt top = x >> (bits - 52);
    return double(bits - 52) + std::log2(top.convert_to<double>());
}

double log2_ratio(const BigInt& num, const BigInt& den) {
    return log2_big(num) - log2_big(den);
}

} // namespace arbc
