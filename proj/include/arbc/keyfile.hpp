#pragma once

#include <string>

#include "arbc/arberr.hpp"
#include "arbc/mceliece.hpp"

namespace arbc {

// Text envelope shared by every key/ciphertext file:
//
//   ARBC1 <scheme> <role>
//   n <n> k <k> [t <t>]
//   <named blocks>
//
// Matrices are one block each: "<name> <rows> <cols>" followed by one
// lowercase-hex row per line (LSB-first bit packing, two digits per byte).
// The information set is "J <k>" followed by the indices on one line.
// Private files carry only primary matrices (M, T, never their inverses);
// derived pieces are recomputed on load, which keeps files canonical.

inline constexpr const char* kMagic = "ARBC1";

enum class Scheme { classic, arberr };

std::string scheme_name(Scheme s);

void save_classic_public(const std::string& path, const ClassicPublicKey& pk);
ClassicPublicKey load_classic_public(const std::string& path);

void save_classic_private(const std::string& path, const ClassicPrivateKey& sk);
ClassicPrivateKey load_classic_private(const std::string& path);

void save_arb_public(const std::string& path, const ArbErrPublicKey& pk);
ArbErrPublicKey load_arb_public(const std::string& path);

void save_arb_private(const std::string& path, const ArbErrPrivateKey& sk);
ArbErrPrivateKey load_arb_private(const std::string& path);

struct CiphertextFile {
    Scheme scheme = Scheme::classic;
    std::size_t n = 0, k = 0;
    unsigned t = 0;  // classic only
    BitVector c;
};

void save_ciphertext(const std::string& path, const CiphertextFile& ct);
CiphertextFile load_ciphertext(const std::string& path);

// peek at the header without loading the payload
struct Envelope {
    Scheme scheme;
    std::string role;  // "public" | "private" | "ciphertext"
};
Envelope probe_file(const std::string& path);

} // namespace arbc
