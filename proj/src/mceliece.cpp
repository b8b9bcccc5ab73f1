#include "arbc/mceliece.hpp"

#include "arbc/spectrum.hpp"

namespace arbc {

namespace {

uint32_t syndrome_bits(const BitVector& s) {
    uint32_t out = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.get(i)) out |= uint32_t{1} << i;
    return out;
}

} // namespace

SyndromeTable::SyndromeTable(const LinearCode& code) {
    n_ = code.n();
    redundancy_ = code.n() - code.k();
    if (redundancy_ > kMaxSyndromeBits)
        throw TableTooLarge("syndrome table would need 2^" +
                            std::to_string(redundancy_) + " entries");
    if (n_ > 64) throw TableTooLarge("error patterns longer than 64 bits");

    std::size_t entries = std::size_t{1} << redundancy_;
    leader_.assign(entries, 0);
    weight_.assign(entries, 0xff);

    // syndrome of each unit error, packed
    std::vector<uint32_t> col(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        BitVector e(n_);
        e.set(j, true);
        col[j] = syndrome_bits(code.syndrome(e));
    }

    weight_[0] = 0;
    std::size_t filled = 1;

    // enumerate error patterns in order of increasing weight, so the first
    // pattern reaching a syndrome is a minimum-weight leader for its coset
    std::vector<std::size_t> pos;
    for (unsigned w = 1; w <= n_ && filled < entries; ++w) {
        pos.assign(w, 0);
        // iterative choose-w loop: pos holds strictly increasing positions
        for (std::size_t i = 0; i < w; ++i) pos[i] = i;
        for (;;) {
            uint64_t pattern = 0;
            uint32_t syn = 0;
            for (std::size_t i = 0; i < w; ++i) {
                pattern |= uint64_t{1} << pos[i];
                syn ^= col[pos[i]];
            }
            if (weight_[syn] == 0xff) {
                weight_[syn] = uint8_t(w);
                leader_[syn] = pattern;
                if (++filled == entries) break;
            }
            // next combination
            std::size_t i = w;
            while (i > 0 && pos[i - 1] == n_ - w + (i - 1)) --i;
            if (i == 0) break;
            ++pos[i - 1];
            for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    if (filled != entries)
        throw InvalidParameter("parity check is rank deficient: unreachable syndromes");
}

BitVector SyndromeTable::leader(const BitVector& syndrome) const {
    if (syndrome.size() != redundancy_)
        throw DimensionMismatch("syndrome length mismatch");
    uint64_t pattern = leader_[syndrome_bits(syndrome)];
    BitVector e(n_);
    auto w = e.words();
    w[0] = pattern;
    return e;
}

ClassicKeyPair classic_keygen(const LinearCode& code, unsigned t, Rng& rng) {
    if (code.n() - code.k() > kMaxSyndromeBits)
        throw TableTooLarge("decoder table infeasible for this redundancy");
    if (code.k() <= kMaxExhaustiveDim) {
        unsigned d = min_distance(code);
        if (2 * t + 1 > d)
            throw DistanceTooSmall("need 2t+1 <= " + std::to_string(d) +
                                   ", got t = " + std::to_string(t));
    }

    ClassicPrivateKey sk{
        .s = {}, .s_inv = {}, .code = code, .p = {}, .p_inv = {},
        .t = t, .table = SyndromeTable(code),
    };
    sk.s = random_nonsingular(code.k(), rng);
    sk.s_inv = inverse(sk.s);
    sk.p = random_permutation_matrix(code.n(), rng);
    sk.p_inv = sk.p.transpose();  // permutations are orthogonal

    ClassicPublicKey pk{
        .g_pub = mat_mul(sk.s, mat_mul(code.generator(), sk.p)),
        .t = t,
    };
    return {std::move(pk), std::move(sk)};
}

BitVector classic_encrypt(const ClassicPublicKey& pk, const BitVector& u,
                          const BitVector& e) {
    if (e.size() != pk.g_pub.cols()) throw DimensionMismatch("error length");
    if (e.weight() > pk.t)
        throw WeightExceedsT("error weight " + std::to_string(e.weight()) +
                             " exceeds bound " + std::to_string(pk.t));
    return vec_mul(u, pk.g_pub) ^ e;
}

BitVector classic_decrypt(const ClassicPrivateKey& sk, const BitVector& c) {
    // undo the permutation, strip the error via the coset leader, unscramble
    BitVector y = vec_mul(c, sk.p_inv);
    BitVector e = sk.table.leader(sk.code.syndrome(y));
    if (e.weight() > sk.t)
        throw DecodeFailure("nearest coset leader has weight " +
                            std::to_string(e.weight()));
    BitVector us = sk.code.solve_message(y ^ e);
    return vec_mul(us, sk.s_inv);
}

} // namespace arbc
