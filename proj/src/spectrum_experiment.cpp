#include "arbc/attacks.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <thread>

namespace arbc {

BitMatrix syndrome_transform(const BitMatrix& h, const BitMatrix& qt) {
    return mat_mul(h, qt.transpose());
}

unsigned resolve_thread_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("ARBC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// an observer of c = e G2 effectively faces the code whose parity check is
// H (QT)^T; row-reduce it, count the checks that vanish, and measure the
// code that remains
SpectrumTrialReport run_trial(const LinearCode& code, std::size_t index,
                              uint64_t seed) {
    std::size_t n = code.n(), k = code.k();
    Rng rng(seed);
    BitMatrix t = random_nonsingular(n, rng);
    // the transform is sampled over arbitrary k-subsets, which is what
    // spreads z: subsets that happen to be information sets give z = 0
    IndexSet j = random_index_set(n, k, rng);
    BitMatrix q = build_qt(t, j, rng);
    BitMatrix qt = mat_mul(q, t);

    Rref rr = rref(syndrome_transform(code.parity_check(), qt));
    std::size_t z = (n - k) - rr.rank;
    BitMatrix surviving(rr.rank, n);
    for (std::size_t i = 0; i < rr.rank; ++i) surviving.set_row(i, rr.m.row(i));

    BitMatrix gen = right_kernel(surviving);
    if (gen.rows() != k + z)
        throw Error("internal: transformed dimension is not k + z");
    if (!mat_mul(surviving, gen.transpose()).is_zero())
        throw Error("internal: surviving checks do not annihilate the code");

    SpectrumTrialReport rep;
    rep.trial_index = index;
    rep.trial_seed = seed;
    rep.zero_rows = z;
    rep.n = n;
    rep.k_eff = k + z;
    // z is tiny with overwhelming probability, so a small headroom past the
    // public exhaustive cutoff keeps rare trials exact instead of failing
    rep.spectrum = exhaustive_spectrum(gen, kMaxExhaustiveDim + 4);
    rep.min_dist = rep.spectrum.min_positive_weight();
    return rep;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

SpectrumStudyReport spectrum_experiment(const LinearCode& code,
                                        std::size_t trials,
                                        uint64_t master_seed,
                                        unsigned threads) {
    if (trials == 0) throw InvalidParameter("need at least one trial");
    if (code.k() + 2 > kMaxExhaustiveDim)
        throw DimensionTooLarge("code dimension too large for exhaustive spectra");

    SpectrumStudyReport report;
    report.n = code.n();
    report.k = code.k();
    report.master_seed = master_seed;
    report.trials = trials;
    report.records.resize(trials);

    unsigned nthreads = std::min<std::size_t>(resolve_thread_count(threads), trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= trials) return;
            report.records[i] = run_trial(code, i, Rng::derive(master_seed, i));
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // aggregate in trial order so the floating point is schedule-independent
    std::map<std::size_t, std::vector<unsigned>> dists;
    for (const auto& rec : report.records)
        dists[rec.k_eff].push_back(rec.min_dist);
    for (const auto& [k_eff, ds] : dists) {
        SpectrumGroupStats g;
        g.n = report.n;
        g.k_eff = k_eff;
        g.count = ds.size();
        g.d_min = g.d_max = ds[0];
        double sum = 0;
        for (unsigned d : ds) {
            g.d_min = std::min(g.d_min, d);
            g.d_max = std::max(g.d_max, d);
            sum += d;
        }
        g.d_avg = sum / double(ds.size());
        double sq = 0;
        for (unsigned d : ds) sq += (d - g.d_avg) * (d - g.d_avg);
        g.d_var = sq / double(ds.size());
        g.gv = gv_bound(report.n, k_eff);
        report.groups.push_back(g);
    }
    return report;
}

std::string format_spectrum_study(const SpectrumStudyReport& report) {
    std::string out;
    for (const auto& r : report.records) {
        out += "trial " + std::to_string(r.trial_index) +
               " seed " + std::to_string(r.trial_seed) +
               " z " + std::to_string(r.zero_rows) +
               " n " + std::to_string(r.n) +
               " k_eff " + std::to_string(r.k_eff) +
               " d_min " + std::to_string(r.min_dist) + "\n";
    }
    for (const auto& g : report.groups) {
        out += "group n " + std::to_string(g.n) +
               " k_eff " + std::to_string(g.k_eff) +
               " count " + std::to_string(g.count) +
               " d_min " + std::to_string(g.d_min) +
               " d_max " + std::to_string(g.d_max) +
               " d_avg " + format_double(g.d_avg) +
               " d_var " + format_double(g.d_var) +
               " gv " + std::to_string(g.gv) + "\n";
    }
    return out;
}

} // namespace arbc
