#include "arbc/keyfile.hpp"

#include <charconv>
#include <fstream>

namespace arbc {

namespace {

struct Parser {
    std::ifstream in;
    std::string path;

    Parser(const std::string& p) : in(p, std::ios::binary), path(p) {
        if (!in) throw Error(path + ": cannot open");
    }

    std::string next() {
        std::string tok;
        if (!(in >> tok)) throw ParseError(path + ": unexpected end of file");
        return tok;
    }

    uint64_t number() {
        std::string tok = next();
        uint64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw ParseError(path + ": expected a number, got '" + tok + "'");
        return v;
    }

    void expect(const std::string& what) {
        std::string tok = next();
        if (tok != what)
            throw ParseError(path + ": expected '" + what + "', got '" + tok + "'");
    }

    void expect_number(const std::string& label, uint64_t want) {
        uint64_t got = number();
        if (got != want)
            throw ParseError(path + ": " + label + " is " + std::to_string(got) +
                             ", expected " + std::to_string(want));
    }

    BitMatrix matrix(const std::string& name, std::size_t rows, std::size_t cols) {
        expect(name);
        expect_number(name + " rows", rows);
        expect_number(name + " cols", cols);
        BitMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            m.set_row(i, BitVector::from_hex(cols, next()));
        return m;
    }

    IndexSet index_set(std::size_t count, std::size_t bound) {
        expect("J");
        expect_number("J size", count);
        std::vector<std::size_t> idx(count);
        for (auto& v : idx) {
            v = number();
            if (v >= bound) throw ParseError(path + ": index out of range");
        }
        try {
            return IndexSet(std::move(idx));
        } catch (const InvalidParameter&) {
            throw ParseError(path + ": J is not strictly increasing");
        }
    }

    void finish() {
        std::string tok;
        if (in >> tok) throw ParseError(path + ": trailing data '" + tok + "'");
    }
};

struct Header {
    Scheme scheme;
    std::string role;
    std::size_t n, k;
    unsigned t = 0;  // classic only
};

Scheme parse_scheme(Parser& p, const std::string& tok) {
    if (tok == "classic") return Scheme::classic;
    if (tok == "arberr") return Scheme::arberr;
    throw ParseError(p.path + ": unknown scheme '" + tok + "'");
}

Header read_header(Parser& p) {
    if (p.next() != kMagic) throw ParseError(p.path + ": bad magic");
    Header h{parse_scheme(p, p.next()), p.next(), 0, 0, 0};
    if (h.role != "public" && h.role != "private" && h.role != "ciphertext")
        throw ParseError(p.path + ": unknown role '" + h.role + "'");
    p.expect("n");
    h.n = p.number();
    p.expect("k");
    h.k = p.number();
    if (h.k == 0 || h.k >= h.n) throw ParseError(p.path + ": need 0 < k < n");
    if (h.scheme == Scheme::classic) {
        p.expect("t");
        h.t = unsigned(p.number());
    }
    return h;
}

void demand(Parser& p, const Header& h, Scheme scheme, const std::string& role) {
    if (h.scheme != scheme || h.role != role)
        throw SchemeMismatch(p.path + ": holds a " + scheme_name(h.scheme) + " " +
                             h.role + ", need " + scheme_name(scheme) + " " + role);
}

void write_matrix(std::string& out, const std::string& name, const BitMatrix& m) {
    out += name + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) out += m.row(i).to_hex() + "\n";
}

std::string header_line(Scheme scheme, const std::string& role) {
    return std::string(kMagic) + " " + scheme_name(scheme) + " " + role + "\n";
}

std::string params_line(std::size_t n, std::size_t k) {
    return "n " + std::to_string(n) + " k " + std::to_string(k) + "\n";
}

std::string params_line(std::size_t n, std::size_t k, unsigned t) {
    return "n " + std::to_string(n) + " k " + std::to_string(k) +
           " t " + std::to_string(t) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(path + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw Error(path + ": write failed");
}

bool is_permutation(const BitMatrix& m) {
    if (m.rows() != m.cols()) return false;
    std::vector<bool> hit(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        if (r.weight() != 1) return false;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (r.get(c)) {
                if (hit[c]) return false;
                hit[c] = true;
            }
    }
    return true;
}

} // namespace

std::string scheme_name(Scheme s) {
    return s == Scheme::classic ? "classic" : "arberr";
}

void save_classic_public(const std::string& path, const ClassicPublicKey& pk) {
    std::string out = header_line(Scheme::classic, "public") +
                      params_line(pk.g_pub.cols(), pk.g_pub.rows(), pk.t);
    write_matrix(out, "G_pub", pk.g_pub);
    write_file(path, out);
}

ClassicPublicKey load_classic_public(const std::string& path) {
    Parser p(path);
    Header h = read_header(p);
    demand(p, h, Scheme::classic, "public");
    ClassicPublicKey pk{p.matrix("G_pub", h.k, h.n), h.t};
    p.finish();
    return pk;
}

void save_classic_private(const std::string& path, const ClassicPrivateKey& sk) {
    std::string out = header_line(Scheme::classic, "private") +
                      params_line(sk.code.n(), sk.code.k(), sk.t);
    write_matrix(out, "S", sk.s);
    write_matrix(out, "G", sk.code.generator());
    write_matrix(out, "P", sk.p);
    write_file(path, out);
}

ClassicPrivateKey load_classic_private(const std::string& path) {
    Parser p(path);
    Header h = read_header(p);
    demand(p, h, Scheme::classic, "private");
    BitMatrix s = p.matrix("S", h.k, h.k);
    BitMatrix g = p.matrix("G", h.k, h.n);
    BitMatrix perm = p.matrix("P", h.n, h.n);
    p.finish();
    if (!is_permutation(perm)) throw ParseError(path + ": P is not a permutation");
    try {
        LinearCode code(std::move(g));
        return ClassicPrivateKey{
            .s = s, .s_inv = inverse(s),
            .code = code,
            .p = perm, .p_inv = perm.transpose(),
            .t = h.t,
            .table = SyndromeTable(code),
        };
    } catch (const SingularMatrix&) {
        throw ParseError(path + ": S is singular");
    } catch (const RankDeficient&) {
        throw ParseError(path + ": G is rank deficient");
    }
}

void save_arb_public(const std::string& path, const ArbErrPublicKey& pk) {
    std::string out = header_line(Scheme::arberr, "public") +
                      params_line(pk.g1.cols(), pk.g1.rows());
    write_matrix(out, "G1", pk.g1);
    write_matrix(out, "G2", pk.g2);
    write_file(path, out);
}

ArbErrPublicKey load_arb_public(const std::string& path) {
    Parser p(path);
    Header h = read_header(p);
    demand(p, h, Scheme::arberr, "public");
    ArbErrPublicKey pk{p.matrix("G1", h.k, h.n), p.matrix("G2", h.n, h.n)};
    p.finish();
    return pk;
}

void save_arb_private(const std::string& path, const ArbErrPrivateKey& sk) {
    std::string out = header_line(Scheme::arberr, "private") +
                      params_line(sk.code.n(), sk.code.k());
    write_matrix(out, "G", sk.code.generator());
    write_matrix(out, "M", sk.m);
    write_matrix(out, "T", sk.t);
    write_matrix(out, "Q", sk.q);
    write_matrix(out, "G0", sk.g0);
    out += "J " + std::to_string(sk.code.info_set().size()) + "\n";
    std::string sep;
    for (auto i : sk.code.info_set()) {
        out += sep + std::to_string(i);
        sep = " ";
    }
    out += "\n";
    write_file(path, out);
}

ArbErrPrivateKey load_arb_private(const std::string& path) {
    Parser p(path);
    Header h = read_header(p);
    demand(p, h, Scheme::arberr, "private");
    BitMatrix g = p.matrix("G", h.k, h.n);
    BitMatrix m = p.matrix("M", h.n, h.n);
    BitMatrix t = p.matrix("T", h.n, h.n);
    BitMatrix q = p.matrix("Q", h.n, h.n);
    BitMatrix g0 = p.matrix("G0", h.n, h.n);
    IndexSet j = p.index_set(h.k, h.n);
    p.finish();
    try {
        ArbErrPrivateKey sk{
            .code = LinearCode(std::move(g), std::move(j)),
            .m = m, .m_inv = inverse(m),
            .t = t, .t_inv = inverse(t),
            .q = q,
            .g0 = g0,
            .qt = mat_mul(q, t),
        };
        // structural invariants a usable key cannot violate
        if (!select_columns(sk.qt, sk.code.info_set()).is_zero())
            throw ParseError(path + ": QT does not vanish on J");
        if (rank(sk.qt) != sk.code.n() - sk.code.k())
            throw ParseError(path + ": QT has the wrong rank");
        for (std::size_t i = 0; i < sk.g0.rows(); ++i)
            if (!sk.code.syndrome(sk.g0.row(i)).is_zero())
                throw ParseError(path + ": G0 row " + std::to_string(i) +
                                 " is not a codeword");
        return sk;
    } catch (const SingularMatrix&) {
        throw ParseError(path + ": M or T is singular");
    } catch (const RankDeficient&) {
        throw ParseError(path + ": J is not an information set of G");
    }
}

void save_ciphertext(const std::string& path, const CiphertextFile& ct) {
    std::string out = header_line(ct.scheme, "ciphertext");
    out += ct.scheme == Scheme::classic ? params_line(ct.n, ct.k, ct.t)
                                        : params_line(ct.n, ct.k);
    out += "c " + std::to_string(ct.c.size()) + "\n" + ct.c.to_hex() + "\n";
    write_file(path, out);
}

CiphertextFile load_ciphertext(const std::string& path) {
    Parser p(path);
    Header h = read_header(p);
    if (h.role != "ciphertext")
        throw SchemeMismatch(path + ": holds a " + h.role + ", need a ciphertext");
    CiphertextFile ct;
    ct.scheme = h.scheme;
    ct.n = h.n;
    ct.k = h.k;
    ct.t = h.t;
    p.expect("c");
    p.expect_number("c length", h.n);
    ct.c = BitVector::from_hex(h.n, p.next());
    p.finish();
    return ct;
}

Envelope probe_file(const std::string& path) {
    Parser p(path);
    if (p.next() != kMagic) throw ParseError(path + ": bad magic");
    Envelope env{parse_scheme(p, p.next()), p.next()};
    if (env.role != "public" && env.role != "private" && env.role != "ciphertext")
        throw ParseError(path + ": unknown role '" + env.role + "'");
    return env;
}

} // namespace arbc
