#include "arbc/linear_code.hpp"

namespace arbc {

IndexSet first_information_set(const BitMatrix& g) {
    // run a row echelon pass; the pivot columns are exactly the greedy
    // "keep if it grows the rank" choices
    Rref rr = rref(g);
    if (rr.rank != g.rows())
        throw RankDeficient("generator has rank " + std::to_string(rr.rank) +
                            ", expected " + std::to_string(g.rows()));
    return IndexSet(rr.pivots);
}

LinearCode::LinearCode(BitMatrix generator)
    : g_(std::move(generator)), j_(first_information_set(g_)) {
    finish();
}

LinearCode::LinearCode(BitMatrix generator, IndexSet info_set)
    : g_(std::move(generator)), j_(std::move(info_set)) {
    if (j_.size() != g_.rows())
        throw InvalidParameter("information set size must equal k");
    finish();
}

void LinearCode::finish() {
    if (g_.rows() == 0 || g_.rows() > g_.cols())
        throw InvalidParameter("generator must be k x n with 1 <= k <= n");
    auto inv = try_inverse(select_columns(g_, j_));
    if (!inv) throw RankDeficient("columns do not form an information set");
    gj_inv_ = *std::move(inv);
    h_ = right_kernel(g_);
}

BitVector LinearCode::syndrome(const BitVector& v) const {
    if (v.size() != n()) throw DimensionMismatch("syndrome input length");
    return mul_vec(h_, v);
}

BitMatrix hamming74_generator() {
    return BitMatrix::from_rows({
        "1000011",
        "0100101",
        "0010110",
        "0001111",
    });
}

} // namespace arbc
