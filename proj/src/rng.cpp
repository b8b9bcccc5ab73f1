#include "arbc/rng.hpp"

#include <algorithm>

namespace arbc {

BitVector random_vector(std::size_t n, Rng& rng) {
    BitVector v(n);
    auto w = v.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = rng.word();
    if (n & 63) w[w.size() - 1] &= (uint64_t{1} << (n & 63)) - 1;
    return v;
}

BitVector random_weight_vector(std::size_t n, std::size_t w, Rng& rng) {
    if (w > n) throw InvalidParameter("weight exceeds length");
    BitVector v(n);
    for (auto i : random_index_set(n, w, rng)) v.set(i, true);
    return v;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto rw = m.row_words(i);
        for (std::size_t j = 0; j < rw.size(); ++j) rw[j] = rng.word();
        if (cols & 63) rw[rw.size() - 1] &= (uint64_t{1} << (cols & 63)) - 1;
    }
    return m;
}

BitMatrix random_nonsingular(std::size_t n, Rng& rng) {
    if (n == 0) throw InvalidParameter("empty matrix");
    // uniform over all n x n, retry until invertible; success chance
    // prod (1 - 2^-i) > 0.288, so a handful of draws suffice
    for (;;) {
        BitMatrix m = random_matrix(n, n, rng);
        if (rank(m) == n) return m;
    }
}

BitMatrix random_full_column_rank(std::size_t rows, std::size_t cols, Rng& rng) {
    if (cols == 0 || rows < cols)
        throw InvalidParameter("need rows >= cols >= 1 for full column rank");
    for (;;) {
        BitMatrix m = random_matrix(rows, cols, rng);
        if (rank(m) == cols) return m;
    }
}

BitMatrix random_permutation_matrix(std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    BitMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(i, perm[i], true);
    return p;
}

IndexSet random_index_set(std::size_t n, std::size_t k, Rng& rng) {
    if (k > n) throw InvalidParameter("subset larger than ground set");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + rng.below(n - i)]);
    std::vector<std::size_t> out(pool.begin(), pool.begin() + std::ptrdiff_t(k));
    std::sort(out.begin(), out.end());
    return IndexSet(std::move(out));
}

} // namespace arbc
