#include "arbc/attacks.hpp"

namespace arbc {

namespace {

// reduce v against the pivot rows of a row-reduced basis; zero iff v lies
// in the row space
bool in_rowspace(const Rref& basis, BitVector v) {
    for (std::size_t i = 0; i < basis.pivots.size(); ++i)
        if (v.get(basis.pivots[i])) v ^= basis.m.row(i);
    return v.is_zero();
}

uint64_t pack(const BitVector& v) { return v.words()[0]; }

BitVector unpack(uint64_t bits, std::size_t len) {
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i)
        if ((bits >> i) & 1) v.set(i, true);
    return v;
}

} // namespace

BitVector direct_attack_bruteforce(const ArbErrPublicKey& pk,
                                   const ArbErrCiphertext& ct) {
    std::size_t k = pk.g1.rows(), n = pk.g1.cols();
    if (ct.c.size() != n) throw DimensionMismatch("ciphertext length");
    if (std::min(k, n - k) > 20)
        throw DimensionTooLarge("message space too large for brute force");
    if (k > kMaxExhaustiveDim)
        throw DimensionTooLarge("2^k enumeration infeasible");

    Rref basis = rref(pk.g2);
    std::optional<BitVector> found;
    for (uint64_t bits = 0; bits < (uint64_t{1} << k); ++bits) {
        BitVector u = unpack(bits, k);
        if (!in_rowspace(basis, ct.c ^ vec_mul(u, pk.g1))) continue;
        if (found) throw MultipleSolutions("two messages explain the ciphertext");
        found = std::move(u);
    }
    if (!found) throw NoSolution("no message explains the ciphertext");
    return *found;
}

bool uniqueness_check(const ArbErrPublicKey& pk) {
    std::size_t k = pk.g1.rows(), n = pk.g1.cols();
    if (k > 7 || n > 15)
        throw DimensionTooLarge("exhaustive uniqueness check capped at k=7, n=15");

    // owner of each seen ciphertext, packed; n <= 15 keeps this dense
    std::vector<int32_t> owner(std::size_t{1} << n, -1);
    for (uint64_t um = 0; um < (uint64_t{1} << k); ++um) {
        BitVector u = unpack(um, k);
        BitVector base = vec_mul(u, pk.g1);
        for (uint64_t em = 0; em < (uint64_t{1} << n); ++em) {
            uint64_t c = pack(base ^ vec_mul(unpack(em, n), pk.g2));
            if (owner[c] == -1) owner[c] = int32_t(um);
            else if (owner[c] != int32_t(um)) return false;
        }
    }
    return true;
}

} // namespace arbc
