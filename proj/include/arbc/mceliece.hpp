#pragma once

#include <cstdint>
#include <vector>

#include "arbc/linear_code.hpp"
#include "arbc/rng.hpp"

namespace arbc {

// Complete coset-leader table for a code with n - k <= kMaxSyndromeBits
// redundancy: one minimum-weight error pattern per syndrome.
inline constexpr std::size_t kMaxSyndromeBits = 24;

class SyndromeTable {
public:
    SyndromeTable() = default;
    explicit SyndromeTable(const LinearCode& code);

    // coset leader for a syndrome (as produced by LinearCode::syndrome)
    BitVector leader(const BitVector& syndrome) const;
    std::size_t size() const { return leader_.size(); }
    unsigned leader_weight(uint32_t syndrome_bits) const { return weight_[syndrome_bits]; }

private:
    std::size_t n_ = 0, redundancy_ = 0;
    std::vector<uint64_t> leader_;  // indexed by syndrome bits
    std::vector<uint8_t> weight_;
};

// Textbook randomized-generator scheme: public generator S G P hides the
// decodable code G; decryption bounds the error weight by t.
struct ClassicPublicKey {
    BitMatrix g_pub;  // k x n
    unsigned t = 0;
};

struct ClassicPrivateKey {
    BitMatrix s, s_inv;   // k x k scrambler
    LinearCode code;      // the decodable code
    BitMatrix p, p_inv;   // n x n permutation
    unsigned t = 0;
    SyndromeTable table;
};

struct ClassicKeyPair {
    ClassicPublicKey pub;
    ClassicPrivateKey priv;
};

ClassicKeyPair classic_keygen(const LinearCode& code, unsigned t, Rng& rng);

// c = u S G P + e, weight(e) <= t
BitVector classic_encrypt(const ClassicPublicKey& pk, const BitVector& u,
                          const BitVector& e);
BitVector classic_decrypt(const ClassicPrivateKey& sk, const BitVector& c);

} // namespace arbc
