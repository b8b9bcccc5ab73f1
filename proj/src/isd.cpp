#include "arbc/attacks.hpp"

#include <chrono>

namespace arbc {

IsdResult isd_prange(const BitMatrix& g_pub, const BitVector& c, unsigned t,
                     Rng& rng, const IsdOptions& opts) {
    std::size_t k = g_pub.rows(), n = g_pub.cols();
    if (c.size() != n) throw DimensionMismatch("ciphertext length");
    if (opts.max_iters == 0) throw InvalidParameter("max_iters must be positive");
    if (rank(g_pub) != k)
        throw InvalidParameter("generator must have full row rank");

    auto t0 = std::chrono::steady_clock::now();
    IsdResult res;
    while (res.iterations < opts.max_iters) {
        IndexSet j = random_index_set(n, k, rng);
        auto inv = try_inverse(select_columns(g_pub, j));
        if (!inv) {
            // a singular block says nothing about where the errors sit, so
            // it does not count as a decoding attempt
            ++res.singular_skips;
            continue;
        }
        ++res.iterations;
        BitVector u = vec_mul(select_coords(c, j), *inv);
        std::size_t w = (c ^ vec_mul(u, g_pub)).weight();
        if (opts.exact_weight ? (w == t) : (w <= t)) {
            res.recovered = std::move(u);
            break;
        }
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

IsdEstimate isd_expected_iterations(std::size_t n, std::size_t k, std::size_t t) {
    if (k == 0 || k >= n) throw InvalidParameter("need 0 < k < n");
    if (t > n - k)
        throw InvalidParameter("t > n-k: no error-free information set exists");
    IsdEstimate est;
    est.num = binomial(n, t);
    est.den = binomial(n - k, t);
    est.log2_tau = log2_ratio(est.num, est.den);
    BigInt q = est.num / est.den, r = est.num % est.den;
    est.tau = q.convert_to<double>() +
              r.convert_to<double>() / est.den.convert_to<double>();
    return est;
}

MaskedIsdReport isd_on_new_scheme_experiment(const ArbErrPublicKey& pk,
                                             unsigned t, uint64_t trials,
                                             uint64_t max_iters, Rng& rng,
                                             bool zero_error) {
    std::size_t n = pk.g2.rows(), k = pk.g1.rows();
    MaskedIsdReport rep;
    rep.trials = trials;
    rep.masked_weight_hist.assign(n + 1, 0);
    uint64_t weight_sum = 0;

    IsdOptions opts;
    opts.max_iters = max_iters;
    for (uint64_t i = 0; i < trials; ++i) {
        BitVector u = random_vector(k, rng);
        BitVector e = zero_error ? BitVector(n) : random_vector(n, rng);
        BitVector masked = vec_mul(e, pk.g2);
        ++rep.masked_weight_hist[masked.weight()];
        weight_sum += masked.weight();

        auto ct = arb_encrypt(pk, u, e);
        IsdResult isd = isd_prange(pk.g1, ct.c, t, rng, opts);
        if (isd.recovered) {
            if (*isd.recovered == u) ++rep.successes;
            else ++rep.false_hits;
        }
    }
    if (trials) {
        rep.success_rate = double(rep.successes) / double(trials);
        rep.mean_masked_weight = double(weight_sum) / double(trials);
    }
    return rep;
}

} // namespace arbc
