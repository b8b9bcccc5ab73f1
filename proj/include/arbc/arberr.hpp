#pragma once

#include "arbc/linear_code.hpp"
#include "arbc/rng.hpp"

namespace arbc {

// Masked-generator scheme where the error vector may have any weight.
// Open key: (G1, G2) = (G M, Q (G0 + T) M). The product Q T vanishes on the
// information set J, which is what decryption exploits.

struct ArbErrPublicKey {
    BitMatrix g1;  // k x n, rank k
    BitMatrix g2;  // n x n, rank n-k
};

struct ArbErrPrivateKey {
    LinearCode code;       // G, J and (G_J)^-1 live here
    BitMatrix m, m_inv;    // n x n nonsingular
    BitMatrix t, t_inv;    // n x n nonsingular
    BitMatrix q;           // n x n, rank n-k
    BitMatrix g0;          // n x n, every row a codeword
    BitMatrix qt;          // cached Q*T: k zero columns on J, rank n-k
};

struct ArbErrCiphertext {
    BitVector c;  // length n
};

struct ArbErrKeyPair {
    ArbErrPublicKey pub;
    ArbErrPrivateKey priv;
};

// Q such that Q*T has zero columns exactly on j and rank n-k:
// Q = L * left_kernel(T_j) with L a random full-column-rank n x (n-k) matrix.
BitMatrix build_qt(const BitMatrix& t, const IndexSet& j, Rng& rng);

// n x n matrix of independent random codewords (rows)
BitMatrix build_g0(const LinearCode& code, Rng& rng);

// Retries G0 (and occasionally T) until rank(G2) = n-k; throws
// RetriesExceeded after 64 attempts.
ArbErrKeyPair arb_keygen(const LinearCode& code, Rng& rng);

// c = u G1 + e G2; e may have any weight, including n
ArbErrCiphertext arb_encrypt(const ArbErrPublicKey& pk, const BitVector& u,
                             const BitVector& e);

struct ArbErrEncryption {
    ArbErrCiphertext ct;
    BitVector e;  // the error that was drawn
};
// error drawn uniformly from all 2^n vectors
ArbErrEncryption arb_encrypt_random(const ArbErrPublicKey& pk, const BitVector& u,
                                    Rng& rng);

BitVector arb_decrypt(const ArbErrPrivateKey& sk, const ArbErrCiphertext& ct);

} // namespace arbc
