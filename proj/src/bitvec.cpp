#include "arbc/bitvec.hpp"

namespace arbc {

namespace {

char hex_digit(unsigned v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

unsigned hex_value(char c) {
    if (c >= '0' && c <= '9') return unsigned(c - '0');
    if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
    throw ParseError(std::string("bad hex digit '") + c + "'");
}

} // namespace

// Bytes in index order, bit i of the vector = bit (i % 8) of byte (i / 8).
// Two lowercase hex digits per byte, high nibble first.
std::string BitVector::to_hex() const {
    std::size_t nbytes = (len_ + 7) / 8;
    std::string out;
    out.reserve(nbytes * 2);
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned byte = unsigned(w_[b >> 3] >> ((b & 7) * 8)) & 0xffu;
        out.push_back(hex_digit(byte >> 4));
        out.push_back(hex_digit(byte & 0xfu));
    }
    return out;
}

BitVector BitVector::from_hex(std::size_t len, std::string_view hex) {
    std::size_t nbytes = (len + 7) / 8;
    if (hex.size() != nbytes * 2)
        throw ParseError("hex string has " + std::to_string(hex.size()) +
                         " digits, expected " + std::to_string(nbytes * 2) +
                         " for length " + std::to_string(len));
    BitVector v(len);
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned byte = (hex_value(hex[2 * b]) << 4) | hex_value(hex[2 * b + 1]);
        v.w_[b >> 3] |= uint64_t(byte) << ((b & 7) * 8);
    }
    // reject set bits beyond the declared length
    if (len & 63) {
        uint64_t mask = ~((uint64_t{1} << (len & 63)) - 1);
        if (v.w_.back() & mask)
            throw ParseError("hex payload has bits set past declared length");
    }
    return v;
}

} // namespace arbc
