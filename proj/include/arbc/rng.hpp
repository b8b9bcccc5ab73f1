#pragma once

#include <cstdint>
#include <random>

#include "arbc/bitmatrix.hpp"
#include "arbc/bitvec.hpp"

namespace arbc {

// Deterministic random source. All sampling goes through word()/below(),
// never through std::uniform_int_distribution, whose output is allowed to
// differ between standard library implementations. Same seed, same stream,
// everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t word() { return eng_(); }

    // uniform in [0, bound), bound >= 1; rejection keeps it unbiased
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw InvalidParameter("below(0)");
        if (bound == 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do { x = word(); } while (x >= limit);
        return x % bound;
    }

    bool bit() { return word() >> 63; }

    // Stream splitter: a stable per-index seed derived from a master seed.
    // splitmix64 finalizer over master ^ f(index).
    static uint64_t derive(uint64_t master, uint64_t index) {
        uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

BitVector random_vector(std::size_t n, Rng& rng);
BitVector random_weight_vector(std::size_t n, std::size_t w, Rng& rng);

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
// uniform over GL(n, 2) by rejection sampling
BitMatrix random_nonsingular(std::size_t n, Rng& rng);
// rows x cols with rank == cols (requires rows >= cols)
BitMatrix random_full_column_rank(std::size_t rows, std::size_t cols, Rng& rng);
BitMatrix random_permutation_matrix(std::size_t n, Rng& rng);

// uniform k-subset of {0..n-1} (partial Fisher-Yates, then sorted)
IndexSet random_index_set(std::size_t n, std::size_t k, Rng& rng);

} // namespace arbc
