#include "arbc/arberr.hpp"

namespace arbc {

BitMatrix build_qt(const BitMatrix& t, const IndexSet& j, Rng& rng) {
    std::size_t n = t.rows();
    if (t.cols() != n) throw DimensionMismatch("T must be square");
    std::size_t k = j.size();
    if (k == 0 || k >= n) throw InvalidParameter("need 0 < |j| < n");

    // rows annihilating the J-columns of T; (n-k) of them iff T is nonsingular
    BitMatrix xj = left_kernel(select_columns(t, j));
    if (xj.rows() != n - k)
        throw InvalidParameter("T is singular: kernel dimension " +
                               std::to_string(xj.rows()) + " != " +
                               std::to_string(n - k));
    BitMatrix l = random_full_column_rank(n, n - k, rng);
    return mat_mul(l, xj);
}

BitMatrix build_g0(const LinearCode& code, Rng& rng) {
    std::size_t n = code.n();
    BitMatrix g0(n, n);
    for (std::size_t i = 0; i < n; ++i)
        g0.set_row(i, code.encode(random_vector(code.k(), rng)));
    return g0;
}

ArbErrKeyPair arb_keygen(const LinearCode& code, Rng& rng) {
    std::size_t n = code.n(), k = code.k();
    if (k >= n) throw InvalidParameter("code must have positive redundancy");

    BitMatrix m = random_nonsingular(n, rng);
    BitMatrix t = random_nonsingular(n, rng);
    BitMatrix q = build_qt(t, code.info_set(), rng);
    BitMatrix g0 = build_g0(code, rng);

    // Q(G0+T) usually keeps Q's rank, but an unlucky G0 can collapse it and
    // G2 would leak less than the advertised n-k dimensions. Resample.
    BitMatrix g2_core;  // Q * (G0 + T)
    for (int attempt = 0;; ++attempt) {
        if (attempt == 64) throw RetriesExceeded("rank(G2) < n-k after 64 resamples");
        if (attempt > 0) {
            g0 = build_g0(code, rng);
            if (attempt % 4 == 0) {
                t = random_nonsingular(n, rng);
                q = build_qt(t, code.info_set(), rng);
            }
        }
        g2_core = mat_mul(q, g0 ^ t);
        if (rank(g2_core) == n - k) break;
    }

    ArbErrPrivateKey sk{
        .code = code,
        .m = m, .m_inv = inverse(m),
        .t = t, .t_inv = inverse(t),
        .q = q,
        .g0 = g0,
        .qt = mat_mul(q, t),
    };
    if (!select_columns(sk.qt, code.info_set()).is_zero() || rank(sk.qt) != n - k)
        throw Error("internal: QT lost its structure");

    ArbErrPublicKey pk{
        .g1 = mat_mul(code.generator(), m),
        .g2 = mat_mul(g2_core, m),
    };
    return {std::move(pk), std::move(sk)};
}

ArbErrCiphertext arb_encrypt(const ArbErrPublicKey& pk, const BitVector& u,
                             const BitVector& e) {
    return {vec_mul(u, pk.g1) ^ vec_mul(e, pk.g2)};
}

ArbErrEncryption arb_encrypt_random(const ArbErrPublicKey& pk, const BitVector& u,
                                    Rng& rng) {
    BitVector e = random_vector(pk.g2.rows(), rng);
    return {arb_encrypt(pk, u, e), std::move(e)};
}

BitVector arb_decrypt(const ArbErrPrivateKey& sk, const ArbErrCiphertext& ct) {
    const LinearCode& code = sk.code;
    if (ct.c.size() != code.n()) throw DimensionMismatch("ciphertext length");

    // y = uG + eQG0 + eQT; the last term vanishes on J, the first two form
    // a codeword, so the J-coordinates pin that codeword down exactly
    BitVector y = vec_mul(ct.c, sk.m_inv);
    BitVector w = vec_mul(select_coords(y, code.info_set()), code.info_set_inverse());
    BitVector chat = code.encode(w);     // = uG + eQG0
    BitVector eqt = y ^ chat;            // = eQT
    BitVector eq = vec_mul(eqt, sk.t_inv);
    BitVector ug = chat ^ vec_mul(eq, sk.g0);
    if (!code.is_codeword(ug))
        throw MalformedCiphertext("recovered word is outside the code");
    return code.solve_message(ug);
}

} // namespace arbc
