#include "arbc/spectrum.hpp"

#include <bit>
#include <cmath>

#include "arbc/bigint.hpp"

namespace arbc {

unsigned WeightSpectrum::min_positive_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return unsigned(w);
    throw InvalidParameter("spectrum has no nonzero-weight codeword");
}

WeightSpectrum exhaustive_spectrum(const BitMatrix& generator, std::size_t max_dim) {
    std::size_t k = generator.rows(), n = generator.cols();
    if (k > max_dim)
        throw DimensionTooLarge("dimension " + std::to_string(k) +
                                " too large for exhaustive enumeration (max " +
                                std::to_string(max_dim) + ")");
    WeightSpectrum s;
    s.n = n;
    s.counts.assign(n + 1, 0);
    s.exact = true;

    std::size_t wpr = generator.words_per_row();
    std::vector<uint64_t> acc(wpr, 0);
    s.counts[0] = 1;  // the zero codeword
    // Gray-code order: step i flips message bit ctz(i), so each codeword is
    // one row-xor away from the previous one
    uint64_t total = uint64_t{1} << k;
    for (uint64_t i = 1; i < total; ++i) {
        auto row = generator.row_words(std::size_t(std::countr_zero(i)));
        std::size_t w = 0;
        for (std::size_t j = 0; j < wpr; ++j) {
            acc[j] ^= row[j];
            w += std::popcount(acc[j]);
        }
        ++s.counts[w];
    }
    return s;
}

WeightSpectrum weight_spectrum(const LinearCode& code) {
    return exhaustive_spectrum(code.generator(), kMaxExhaustiveDim);
}

WeightSpectrum weight_spectrum_sampled(const LinearCode& code, uint64_t samples, Rng& rng) {
    if (samples == 0) throw InvalidParameter("need at least one sample");
    if (code.k() > 62)
        throw DimensionTooLarge("sampled spectrum scaling needs k <= 62");
    WeightSpectrum s;
    s.n = code.n();
    s.counts.assign(code.n() + 1, 0);
    s.exact = false;
    s.sample_size = samples;

    std::vector<uint64_t> raw(code.n() + 1, 0);
    for (uint64_t i = 0; i < samples; ++i) {
        BitVector u = random_vector(code.k(), rng);
        ++raw[code.encode(u).weight()];
    }
    // scale sample counts up to the full message space
    double scale = std::ldexp(1.0, int(code.k())) / double(samples);
    for (std::size_t w = 0; w <= code.n(); ++w)
        s.counts[w] = uint64_t(std::llround(double(raw[w]) * scale));
    return s;
}

unsigned min_distance(const LinearCode& code) {
    return weight_spectrum(code).min_positive_weight();
}

unsigned gv_bound(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) throw InvalidParameter("need 1 <= k <= n");
    BigInt budget = BigInt(1) << (n - k);
    BigInt sum = 0;
    unsigned d = 1;
    for (std::size_t i = 0; i + 2 <= n + 1; ++i) {  // candidate d = i + 2
        sum += binomial(n - 1, i);
        if (sum <= budget) d = unsigned(i + 2);
        else break;
    }
    return d;
}

std::string spectrum_table(const WeightSpectrum& s) {
    std::string out;
    for (std::size_t w = 0; w < s.counts.size(); ++w) {
        if (!s.counts[w]) continue;
        out += std::to_string(w);
        out += ' ';
        out += std::to_string(s.counts[w]);
        out += '\n';
    }
    return out;
}

} // namespace arbc
