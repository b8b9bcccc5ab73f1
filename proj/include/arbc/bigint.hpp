#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arbc {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::size_t n, std::size_t k);

// log2 of a positive big integer, accurate to double precision
double log2_big(const BigInt& x);

// exact big-integer ratio num/den rounded into a double log2
double log2_ratio(const BigInt& num, const BigInt& den);

} // namespace arbc
