#include "arbc/bitmatrix.hpp"

#include <cstring>

namespace arbc {

BitMatrix BitMatrix::from_rows(std::initializer_list<const char*> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? std::strlen(*rows.begin()) : 0;
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const char* s : rows) {
        if (std::strlen(s) != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (s[j] != '0' && s[j] != '1') throw InvalidParameter("rows must be 0/1 strings");
            if (s[j] == '1') m.set(i, j, true);
        }
        ++i;
    }
    return m;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto src = row_words(i);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            uint64_t w = src[wi];
            while (w) {
                unsigned b = std::countr_zero(w);
                w &= w - 1;
                t.set(wi * 64 + b, i, true);
            }
        }
    }
    return t;
}

std::string BitMatrix::to_string() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        out += row(i).to_string();
        out += '\n';
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    BitMatrix out(a.rows(), b.cols());
    // c[i] = xor of rows of b selected by bits of a's row i
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        auto orow = out.row_words(i);
        for (std::size_t wi = 0; wi < a.words_per_row(); ++wi) {
            uint64_t w = arow[wi];
            while (w) {
                unsigned bit = std::countr_zero(w);
                w &= w - 1;
                auto brow = b.row_words(wi * 64 + bit);
                for (std::size_t j = 0; j < out.words_per_row(); ++j) orow[j] ^= brow[j];
            }
        }
    }
    return out;
}

BitVector vec_mul(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows())
        throw DimensionMismatch("vec_mul: length " + std::to_string(v.size()) +
                                " vs " + std::to_string(m.rows()) + " rows");
    BitVector out(m.cols());
    auto ow = out.words();
    auto vw = v.words();
    for (std::size_t wi = 0; wi < vw.size(); ++wi) {
        uint64_t w = vw[wi];
        while (w) {
            unsigned bit = std::countr_zero(w);
            w &= w - 1;
            auto mrow = m.row_words(wi * 64 + bit);
            for (std::size_t j = 0; j < ow.size(); ++j) ow[j] ^= mrow[j];
        }
    }
    return out;
}

BitVector mul_vec(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw DimensionMismatch("mul_vec: length " + std::to_string(v.size()) +
                                " vs " + std::to_string(m.cols()) + " cols");
    BitVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        uint64_t acc = 0;
        auto mrow = m.row_words(i);
        auto vw = v.words();
        for (std::size_t j = 0; j < vw.size(); ++j) acc ^= mrow[j] & vw[j];
        if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
}

Rref rref(BitMatrix a) {
    Rref res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && !a.get(piv, c)) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row(i, r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.m = std::move(a);
    return res;
}

std::size_t rank(BitMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && !a.get(piv, c)) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a.get(i, c)) a.xor_row(i, r);
        ++r;
    }
    return r;
}

std::optional<BitMatrix> try_inverse(const BitMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = a.rows();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !work.get(piv, c)) ++piv;
        if (piv == n) return std::nullopt;
        work.swap_rows(c, piv);
        inv.swap_rows(c, piv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && work.get(i, c)) {
                work.xor_row(i, c);
                inv.xor_row(i, c);
            }
        }
    }
    return inv;
}

BitMatrix inverse(const BitMatrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw SingularMatrix("matrix is singular");
    return *std::move(inv);
}

// Gaussian elimination on [a | I]; rows of I that end up alongside zero rows
// of a span the left kernel.
BitMatrix left_kernel(const BitMatrix& a) {
    std::size_t m = a.rows();
    BitMatrix work = a;
    BitMatrix id = BitMatrix::identity(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && !work.get(piv, c)) ++piv;
        if (piv == m) continue;
        work.swap_rows(r, piv);
        id.swap_rows(r, piv);
        for (std::size_t i = 0; i < m; ++i) {
            if (i != r && work.get(i, c)) {
                work.xor_row(i, r);
                id.xor_row(i, r);
            }
        }
        ++r;
    }
    BitMatrix ker(m - r, m);
    for (std::size_t i = r; i < m; ++i) ker.set_row(i - r, id.row(i));
    return ker;
}

BitMatrix right_kernel(const BitMatrix& a) {
    Rref rr = rref(a);
    std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    BitMatrix ker(n - rr.rank, n);
    std::size_t kr = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ker.set(kr, c, true);
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            if (rr.m.get(pr, c)) ker.set(kr, rr.pivots[pr], true);
        ++kr;
    }
    return ker;
}

BitMatrix select_columns(const BitMatrix& a, const IndexSet& cols) {
    for (auto c : cols)
        if (c >= a.cols()) throw IndexOutOfRange("column index out of range");
    BitMatrix out(a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (a.get(i, cols[j])) out.set(i, j, true);
    return out;
}

BitVector select_coords(const BitVector& v, const IndexSet& coords) {
    for (auto c : coords)
        if (c >= v.size()) throw IndexOutOfRange("coordinate index out of range");
    BitVector out(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (v.get(coords[j])) out.set(j, true);
    return out;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
    std::vector<bool> in(n, false);
    for (auto c : s) {
        if (c >= n) throw IndexOutOfRange("index out of range in complement");
        in[c] = true;
    }
    std::vector<std::size_t> out;
    out.reserve(n - s.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return IndexSet(std::move(out));
}

} // namespace arbc
