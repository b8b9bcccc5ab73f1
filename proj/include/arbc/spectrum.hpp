#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbc/linear_code.hpp"
#include "arbc/rng.hpp"

namespace arbc {

// exhaustive enumeration walks all 2^k codewords; keep that honest
inline constexpr std::size_t kMaxExhaustiveDim = 26;

struct WeightSpectrum {
    std::size_t n = 0;
    std::vector<uint64_t> counts;  // counts[w] = codewords of weight w, size n+1
    bool exact = true;
    uint64_t sample_size = 0;  // 0 for exact mode

    uint64_t total() const {
        uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
    unsigned min_positive_weight() const;
};

// all 2^k codewords via Gray-code walk (one row xor per codeword);
// requires k <= max_dim
WeightSpectrum exhaustive_spectrum(const BitMatrix& generator, std::size_t max_dim);

WeightSpectrum weight_spectrum(const LinearCode& code);  // k <= kMaxExhaustiveDim
WeightSpectrum weight_spectrum_sampled(const LinearCode& code, uint64_t samples, Rng& rng);

unsigned min_distance(const LinearCode& code);  // k <= kMaxExhaustiveDim

// largest d such that sum_{i=0}^{d-2} C(n-1, i) <= 2^(n-k)
unsigned gv_bound(std::size_t n, std::size_t k);

// "weight count" per line, zero weights skipped
std::string spectrum_table(const WeightSpectrum& s);

} // namespace arbc
