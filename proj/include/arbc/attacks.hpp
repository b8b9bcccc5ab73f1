#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbc/arberr.hpp"
#include "arbc/bigint.hpp"
#include "arbc/linear_code.hpp"
#include "arbc/rng.hpp"
#include "arbc/spectrum.hpp"

namespace arbc {

// --- information-set decoding --------------------------------------------

struct IsdResult {
    std::optional<BitVector> recovered;  // empty = gave up after max_iters
    uint64_t iterations = 0;             // nonsingular information-set draws
    uint64_t singular_skips = 0;         // draws discarded without counting
    double elapsed_seconds = 0.0;
};

struct IsdOptions {
    uint64_t max_iters = 100000;
    // accept wt(c - uG) == t only, instead of <= t
    bool exact_weight = false;
};

// Plain information-set decoding: sample k columns, invert, re-encode,
// accept when the residual error is within the weight bound.
IsdResult isd_prange(const BitMatrix& g_pub, const BitVector& c, unsigned t,
                     Rng& rng, const IsdOptions& opts = {});

// tau = C(n,t) / C(n-k,t): expected information-set draws until the error
// avoids all k chosen columns
struct IsdEstimate {
    BigInt num, den;     // exact binomial ratio num/den
    double tau;          // num/den as a double (may overflow to inf)
    double log2_tau;
};
IsdEstimate isd_expected_iterations(std::size_t n, std::size_t k, std::size_t t);

// --- attacks on the arbitrary-error scheme --------------------------------

// Tries all 2^k messages, keeping those with ct - u G1 in the row space of
// G2. Exactly one candidate must survive for honest keys.
BitVector direct_attack_bruteforce(const ArbErrPublicKey& pk,
                                   const ArbErrCiphertext& ct);

// Full 2^(k+n) enumeration: true iff no ciphertext collision crosses
// distinct messages.
bool uniqueness_check(const ArbErrPublicKey& pk);

struct MaskedIsdReport {
    uint64_t trials = 0;
    uint64_t successes = 0;       // ISD returned exactly the true message
    uint64_t false_hits = 0;      // ISD returned some other message
    double success_rate = 0.0;
    std::vector<uint64_t> masked_weight_hist;  // histogram of wt(e G2)
    double mean_masked_weight = 0.0;
};

// ISD pointed at G1 with the masked error e*G2 as channel noise. With
// uniform e the masked error weighs about n/2, far beyond any useful t,
// so the attack should fail almost always. zero_error = degenerate control
// (e = 0), where ISD must win.
MaskedIsdReport isd_on_new_scheme_experiment(const ArbErrPublicKey& pk,
                                             unsigned t, uint64_t trials,
                                             uint64_t max_iters, Rng& rng,
                                             bool zero_error = false);

// --- weight-spectrum study of the masked code -----------------------------

// Parity check of the transformed code an eavesdropper sees: H (QT)^T.
BitMatrix syndrome_transform(const BitMatrix& h, const BitMatrix& qt);

struct SpectrumTrialReport {
    std::size_t trial_index = 0;
    uint64_t trial_seed = 0;
    std::size_t zero_rows = 0;     // z: parity rows lost to the transform
    std::size_t n = 0, k_eff = 0;  // k_eff = k + z
    unsigned min_dist = 0;
    WeightSpectrum spectrum;
};

struct SpectrumGroupStats {
    std::size_t n = 0, k_eff = 0;
    std::size_t count = 0;
    unsigned d_min = 0, d_max = 0;
    double d_avg = 0.0;
    double d_var = 0.0;  // population variance
    unsigned gv = 0;     // gv_bound(n, k_eff)
};

struct SpectrumStudyReport {
    std::size_t n = 0, k = 0;
    uint64_t master_seed = 0;
    std::size_t trials = 0;
    std::vector<SpectrumTrialReport> records;   // ordered by trial index
    std::vector<SpectrumGroupStats> groups;     // ordered by k_eff
};

// Per trial (seeded with derive(master_seed, i), so any thread count gives
// identical output): draw a fresh nonsingular T, a fresh uniform k-subset J
// and Q = build_qt(T, J); row-reduce H (QT)^T; the zero rows z measure the
// parity checks lost; the survivors define a code of dimension k + z whose
// exact spectrum and minimum distance are recorded.
SpectrumStudyReport spectrum_experiment(const LinearCode& code,
                                        std::size_t trials,
                                        uint64_t master_seed,
                                        unsigned threads = 0);

// one "trial ..." line per record, then one "group ..." line per group
std::string format_spectrum_study(const SpectrumStudyReport& report);

// thread count: explicit value, else ARBC_THREADS, else all cores
unsigned resolve_thread_count(unsigned requested);

} // namespace arbc
