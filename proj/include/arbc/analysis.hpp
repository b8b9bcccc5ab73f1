#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arbc {

struct ParameterPoint {
    std::size_t n = 0, k = 0;
    unsigned t = 0;
    enum class Scheme { classic, arbitrary_error } scheme = Scheme::classic;
};

// k(n-k): a systematic-form public generator
uint64_t classic_key_bits(std::size_t n, std::size_t k);

// n^2 + k(n-k): G2 is a full n x n matrix on top of the generator
uint64_t new_key_bits(std::size_t n, std::size_t k);

// direct attack costs 2^min(k, n-k) row-space tests
double new_workfactor_log2(std::size_t n, std::size_t k);

// expected information-set draws, log2 (exact binomials inside)
double classic_workfactor_log2(std::size_t n, std::size_t k, std::size_t t);

struct ComparisonRow {
    ParameterPoint classic_point, new_point;
    uint64_t classic_key_bits = 0, new_key_bits = 0;
    double classic_workfactor = 0.0, new_workfactor = 0.0;
    double ratio = 0.0;  // classic_key_bits / new_key_bits
};

using ParameterPairing = std::pair<ParameterPoint, ParameterPoint>;

std::vector<ComparisonRow> comparison_table(std::span<const ParameterPairing> pairs);

// the three classic-vs-new pairings bundled with the tool
std::vector<ParameterPairing> benchmark_pairings();

std::string format_comparison_text(std::span<const ComparisonRow> rows);
std::string format_comparison_records(std::span<const ComparisonRow> rows);

} // namespace arbc
