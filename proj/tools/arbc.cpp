// arbc: keygen / encrypt / decrypt / attack / experiment / report
//
// exit codes: 0 ok, 2 usage, 3 bad data or I/O, 4 attack found nothing

#include "CLI11.hpp"

#include "arbc/analysis.hpp"
#include "arbc/arberr.hpp"
#include "arbc/attacks.hpp"
#include "arbc/bch.hpp"
#include "arbc/keyfile.hpp"
#include "arbc/mceliece.hpp"
#include "arbc/spectrum.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

using namespace arbc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNotFound = 4;

// attack ran to completion but recovered nothing -> exit 4
struct AttackFailed {
    std::string message;
};

template <class... Args>
void addf(std::string& s, const char* fmt, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    s += buf;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(out_path + ": cannot open for writing");
    f << text;
    f.flush();
    if (!f) throw Error(out_path + ": write failed");
    std::printf("wrote %s\n", out_path.c_str());
}

std::string strip_hex_prefix(std::string s) {
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.erase(0, 2);
    return s;
}

unsigned parse_unsigned(const std::string& word, const char* what) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
        return unsigned(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": not a number: " + word);
    }
}

struct CodeSpec {
    LinearCode code;
    unsigned default_t;  // 0 = caller must pick
};

// bch M T | hamming74 | generator-file PATH
CodeSpec parse_code_spec(const std::vector<std::string>& words) {
    if (words.empty()) throw CLI::ValidationError("missing code spec");
    if (words[0] == "bch") {
        if (words.size() != 3)
            throw CLI::ValidationError("usage: bch <m> <t_design>");
        unsigned m = parse_unsigned(words[1], "bch m");
        unsigned t = parse_unsigned(words[2], "bch t_design");
        return {bch_build(m, t), t};
    }
    if (words[0] == "hamming74") {
        if (words.size() != 1)
            throw CLI::ValidationError("hamming74 takes no arguments");
        return {LinearCode(hamming74_generator()), 1};
    }
    if (words[0] == "generator-file") {
        if (words.size() != 2)
            throw CLI::ValidationError("usage: generator-file <path>");
        std::ifstream in(words[1]);
        if (!in) throw Error(words[1] + ": cannot open");
        std::vector<std::string> rows;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty()) rows.push_back(line);
        }
        if (rows.empty()) throw ParseError(words[1] + ": no rows");
        BitMatrix g(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows[0].size())
                throw ParseError(words[1] + ": ragged rows");
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (rows[i][j] != '0' && rows[i][j] != '1')
                    throw ParseError(words[1] + ": rows must be 0/1 strings");
                if (rows[i][j] == '1') g.set(i, j, true);
            }
        }
        return {LinearCode(std::move(g)), 0};
    }
    throw CLI::ValidationError("unknown code spec '" + words[0] +
                               "' (want bch, hamming74 or generator-file)");
}

// --- subcommand bodies -----------------------------------------------------

void run_keygen(const std::string& scheme, const std::vector<std::string>& spec,
                unsigned t_flag, bool t_given, uint64_t seed,
                const std::string& prefix) {
    CodeSpec cs = parse_code_spec(spec);
    std::size_t n = cs.code.n(), k = cs.code.k();
    Rng rng(seed);
    std::string text;

    if (scheme == "classic") {
        unsigned t = t_given ? t_flag : cs.default_t;
        if (t == 0)
            throw CLI::ValidationError("this code spec needs an explicit --t");
        auto kp = classic_keygen(cs.code, t, rng);
        save_classic_public(prefix + ".pub", kp.pub);
        save_classic_private(prefix + ".priv", kp.priv);
        addf(text, "scheme classic n %zu k %zu t %u\n", n, k, t);
        addf(text, "public_key_bits %" PRIu64 "\n", classic_key_bits(n, k));
    } else {
        if (t_given)
            throw CLI::ValidationError("--t applies to the classic scheme only");
        auto kp = arb_keygen(cs.code, rng);
        save_arb_public(prefix + ".pub", kp.pub);
        save_arb_private(prefix + ".priv", kp.priv);
        addf(text, "scheme arberr n %zu k %zu rank_g2 %zu\n", n, k,
             rank(kp.pub.g2));
        addf(text, "public_key_bits %" PRIu64 "\n", new_key_bits(n, k));
    }
    text += "wrote " + prefix + ".pub " + prefix + ".priv\n";
    std::fputs(text.c_str(), stdout);
}

void run_encrypt(const std::string& key_path, const std::string& ptx_hex,
                 const std::string& err_hex, bool random_error, uint64_t seed,
                 const std::string& out_path) {
    if (err_hex.empty() == !random_error)
        throw CLI::ValidationError("pick exactly one of --error and --random-error");

    Envelope env = probe_file(key_path);
    Rng rng(seed);
    CiphertextFile ct;
    BitVector e;

    if (env.scheme == Scheme::classic) {
        auto pk = load_classic_public(key_path);
        std::size_t n = pk.g_pub.cols(), k = pk.g_pub.rows();
        BitVector u = BitVector::from_hex(k, strip_hex_prefix(ptx_hex));
        e = random_error ? random_weight_vector(n, pk.t, rng)
                         : BitVector::from_hex(n, strip_hex_prefix(err_hex));
        ct = {Scheme::classic, n, k, pk.t, classic_encrypt(pk, u, e)};
    } else {
        auto pk = load_arb_public(key_path);
        std::size_t n = pk.g1.cols(), k = pk.g1.rows();
        BitVector u = BitVector::from_hex(k, strip_hex_prefix(ptx_hex));
        if (random_error) {
            auto enc = arb_encrypt_random(pk, u, rng);
            e = enc.e;
            ct = {Scheme::arberr, n, k, 0, enc.ct.c};
        } else {
            e = BitVector::from_hex(n, strip_hex_prefix(err_hex));
            ct = {Scheme::arberr, n, k, 0, arb_encrypt(pk, u, e).c};
        }
    }
    save_ciphertext(out_path, ct);
    std::string text = "ciphertext " + ct.c.to_hex() + "\n";
    addf(text, "error_weight %zu\n", e.weight());
    text += "wrote " + out_path + "\n";
    std::fputs(text.c_str(), stdout);
}

void run_decrypt(const std::string& key_path, const std::string& ct_path) {
    Envelope env = probe_file(key_path);
    if (env.role != "private")
        throw SchemeMismatch(key_path + ": decryption needs a private key");
    CiphertextFile ct = load_ciphertext(ct_path);
    if (ct.scheme != env.scheme)
        throw SchemeMismatch("ciphertext is " + scheme_name(ct.scheme) +
                             ", key is " + scheme_name(env.scheme));

    BitVector u = env.scheme == Scheme::classic
                      ? classic_decrypt(load_classic_private(key_path), ct.c)
                      : arb_decrypt(load_arb_private(key_path), ArbErrCiphertext{ct.c});
    std::printf("plaintext %s\n", u.to_hex().c_str());
}

void run_attack_isd(const std::string& key_path, const std::string& ct_path,
                    unsigned t_flag, bool t_given, uint64_t max_iters,
                    uint64_t trials, uint64_t seed, bool exact) {
    Envelope env = probe_file(key_path);
    BitMatrix g;
    unsigned t = t_flag;
    if (env.scheme == Scheme::classic) {
        auto pk = load_classic_public(key_path);
        g = pk.g_pub;
        if (!t_given) t = pk.t;
    } else {
        if (!t_given)
            throw CLI::ValidationError(
                "the arbitrary-error scheme advertises no weight bound; give --t");
        g = load_arb_public(key_path).g1;
    }
    CiphertextFile ct = load_ciphertext(ct_path);
    if (ct.scheme != env.scheme)
        throw SchemeMismatch("ciphertext is " + scheme_name(ct.scheme) +
                             ", key is " + scheme_name(env.scheme));

    std::size_t n = g.cols(), k = g.rows();
    IsdOptions opts;
    opts.max_iters = max_iters;
    opts.exact_weight = exact;

    std::string text;
    addf(text, "isd n %zu k %zu t %u trials %" PRIu64 " max_iters %" PRIu64 "\n",
         n, k, t, trials, max_iters);

    std::optional<BitVector> first;
    uint64_t found = 0, total_iters = 0;
    for (uint64_t i = 0; i < trials; ++i) {
        Rng rng(Rng::derive(seed, i));
        IsdResult res = isd_prange(g, ct.c, t, rng, opts);
        total_iters += res.iterations;
        addf(text, "trial %" PRIu64 " found %d iterations %" PRIu64
                   " singular_skips %" PRIu64 "\n",
             i, res.recovered ? 1 : 0, res.iterations, res.singular_skips);
        if (res.recovered) {
            ++found;
            if (!first) first = res.recovered;
        }
    }

    IsdEstimate est = isd_expected_iterations(n, k, t);
    addf(text, "found %" PRIu64 "/%" PRIu64 " total_iterations %" PRIu64
               " expected_tau %.6g log2_tau %.4f\n",
         found, trials, total_iters, est.tau, est.log2_tau);
    if (first) text += "plaintext " + first->to_hex() + "\n";
    std::fputs(text.c_str(), stdout);

    if (!first)
        throw AttackFailed{"no message within weight " + std::to_string(t) +
                           " found in " + std::to_string(max_iters) +
                           " iterations per trial"};
}

void run_attack_direct(const std::string& key_path, const std::string& ct_path) {
    auto pk = load_arb_public(key_path);
    CiphertextFile ct = load_ciphertext(ct_path);
    if (ct.scheme != Scheme::arberr)
        throw SchemeMismatch("direct attack targets arberr ciphertexts");

    std::string text;
    addf(text, "direct n %zu k %zu\n", pk.g1.cols(), pk.g1.rows());
    std::fputs(text.c_str(), stdout);
    try {
        BitVector u = direct_attack_bruteforce(pk, ArbErrCiphertext{ct.c});
        std::printf("plaintext %s\n", u.to_hex().c_str());
    } catch (const NoSolution& e) {
        throw AttackFailed{e.what()};
    } catch (const MultipleSolutions& e) {
        throw AttackFailed{e.what()};
    }
}

void run_experiment_spectrum(const std::vector<std::string>& spec,
                             std::size_t trials, uint64_t seed,
                             const std::string& format,
                             const std::string& out_path) {
    CodeSpec cs = parse_code_spec(spec);
    if (cs.code.k() + 2 > kMaxExhaustiveDim)
        throw InvalidParameter("spectrum study enumerates 2^(k+z) codewords; "
                               "needs k + 2 <= " +
                               std::to_string(kMaxExhaustiveDim));
    SpectrumStudyReport report = spectrum_experiment(cs.code, trials, seed);

    std::string text;
    if (format == "records") {
        text = format_spectrum_study(report);
        for (const auto& grp : report.groups)
            for (const auto& rec : report.records)
                if (rec.k_eff == grp.k_eff) {
                    for (std::size_t w = 0; w < rec.spectrum.counts.size(); ++w)
                        if (rec.spectrum.counts[w])
                            addf(text, "spectrum k_eff %zu weight %zu count %" PRIu64 "\n",
                                 grp.k_eff, w, rec.spectrum.counts[w]);
                    break;
                }
    } else {
        addf(text, "spectrum study n %zu k %zu trials %zu seed %" PRIu64 "\n\n",
             report.n, report.k, report.trials, report.master_seed);
        text += format_spectrum_study(report);
        for (const auto& grp : report.groups)
            for (const auto& rec : report.records)
                if (rec.k_eff == grp.k_eff) {
                    addf(text, "\nweight distribution at k_eff %zu "
                               "(trial %zu, %zu trials in group)\n",
                         grp.k_eff, rec.trial_index, grp.count);
                    text += spectrum_table(rec.spectrum);
                    break;
                }
    }
    emit(out_path, text);
}

void run_report_keysizes(const std::string& format, const std::string& out_path) {
    auto pairs = benchmark_pairings();
    auto rows = comparison_table(pairs);
    emit(out_path, format == "records" ? format_comparison_records(rows)
                                       : format_comparison_text(rows));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"code-based encryption that hides errors of any weight"};
    app.require_subcommand(1);

    // keygen <scheme> <code spec...>
    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    std::string kg_scheme;
    std::vector<std::string> kg_spec;
    unsigned kg_t = 0;
    uint64_t kg_seed = 1;
    std::string kg_out = "key";
    keygen->add_option("scheme", kg_scheme, "classic or arberr")
        ->required()
        ->check(CLI::IsMember({"classic", "arberr"}));
    keygen->add_option("spec", kg_spec, "bch <m> <t> | hamming74 | generator-file <path>")
        ->required()
        ->expected(-1);
    keygen->add_option("--t", kg_t, "error weight bound (classic only)");
    keygen->add_option("--seed", kg_seed, "rng seed");
    keygen->add_option("--out", kg_out, "output prefix (.pub/.priv appended)");

    // encrypt
    auto* encrypt = app.add_subcommand("encrypt", "encrypt with a public key");
    std::string en_key, en_ptx, en_err, en_out = "message.ct";
    bool en_random = false;
    uint64_t en_seed = 1;
    encrypt->add_option("--key", en_key, "public key file")->required();
    encrypt->add_option("--plaintext", en_ptx, "message, hex")->required();
    encrypt->add_option("--error", en_err, "error vector, hex");
    encrypt->add_flag("--random-error", en_random, "draw the error from the rng");
    encrypt->add_option("--seed", en_seed, "rng seed");
    encrypt->add_option("--out", en_out, "ciphertext file");

    // decrypt
    auto* decrypt = app.add_subcommand("decrypt", "decrypt with a private key");
    std::string de_key, de_ct;
    decrypt->add_option("--key", de_key, "private key file")->required();
    decrypt->add_option("--ct", de_ct, "ciphertext file")->required();

    // attack isd | direct
    auto* attack = app.add_subcommand("attack", "try to break a ciphertext");
    attack->require_subcommand(1);
    auto* isd = attack->add_subcommand("isd", "information-set decoding");
    std::string at_key, at_ct;
    unsigned at_t = 0;
    uint64_t at_iters = 100000, at_trials = 1, at_seed = 1;
    bool at_exact = false;
    isd->add_option("--key", at_key, "public key file")->required();
    isd->add_option("--ct", at_ct, "ciphertext file")->required();
    isd->add_option("--t", at_t, "assumed error weight bound");
    isd->add_option("--max-iters", at_iters, "information-set draws per trial");
    isd->add_option("--trials", at_trials, "independent attack runs");
    isd->add_option("--seed", at_seed, "rng seed");
    isd->add_flag("--exact", at_exact, "accept weight exactly t, not <= t");
    auto* direct = attack->add_subcommand("direct", "row-space membership scan");
    std::string dr_key, dr_ct;
    direct->add_option("--key", dr_key, "public key file")->required();
    direct->add_option("--ct", dr_ct, "ciphertext file")->required();

    // experiment spectrum
    auto* experiment = app.add_subcommand("experiment", "statistical studies");
    experiment->require_subcommand(1);
    auto* spectrum = experiment->add_subcommand(
        "spectrum", "weight spectrum of the transformed code");
    std::vector<std::string> ex_spec;
    std::size_t ex_trials = 100;
    uint64_t ex_seed = 1;
    std::string ex_format = "text", ex_out;
    spectrum->add_option("--code", ex_spec, "bch <m> <t> | hamming74 | generator-file <path>")
        ->required()
        ->expected(-1);
    spectrum->add_option("--trials", ex_trials, "independent key draws");
    spectrum->add_option("--seed", ex_seed, "master seed");
    spectrum->add_option("--format", ex_format, "text or records")
        ->check(CLI::IsMember({"text", "records"}));
    spectrum->add_option("--out", ex_out, "write the report here instead of stdout");

    // report keysizes
    auto* report = app.add_subcommand("report", "summary tables");
    auto* keysizes = report->add_subcommand(
        "keysizes", "public key size and workfactor comparison");
    report->require_subcommand(1);
    std::string rp_format = "text", rp_out;
    keysizes->add_option("--format", rp_format, "text or records")
        ->check(CLI::IsMember({"text", "records"}));
    keysizes->add_option("--out", rp_out, "write the table here instead of stdout");

    keygen->callback([&] {
        run_keygen(kg_scheme, kg_spec, kg_t, keygen->count("--t") > 0, kg_seed, kg_out);
    });
    encrypt->callback([&] {
        run_encrypt(en_key, en_ptx, en_err, en_random, en_seed, en_out);
    });
    decrypt->callback([&] { run_decrypt(de_key, de_ct); });
    isd->callback([&] {
        run_attack_isd(at_key, at_ct, at_t, isd->count("--t") > 0, at_iters,
                       at_trials, at_seed, at_exact);
    });
    direct->callback([&] { run_attack_direct(dr_key, dr_ct); });
    spectrum->callback([&] {
        run_experiment_spectrum(ex_spec, ex_trials, ex_seed, ex_format, ex_out);
    });
    keysizes->callback([&] { run_report_keysizes(rp_format, rp_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const AttackFailed& f) {
        std::fprintf(stderr, "not found: %s\n", f.message.c_str());
        return kExitNotFound;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return 0;
}
