#include "arbc/analysis.hpp"

#include <algorithm>
#include <cstdio>

#include "arbc/attacks.hpp"
#include "arbc/errors.hpp"

namespace arbc {

namespace {

void check_point(std::size_t n, std::size_t k) {
    if (k == 0 || k >= n) throw InvalidParameter("need 0 < k < n");
}

} // namespace

uint64_t classic_key_bits(std::size_t n, std::size_t k) {
    check_point(n, k);
    return uint64_t(k) * uint64_t(n - k);
}

uint64_t new_key_bits(std::size_t n, std::size_t k) {
    check_point(n, k);
    return uint64_t(n) * uint64_t(n) + uint64_t(k) * uint64_t(n - k);
}

double new_workfactor_log2(std::size_t n, std::size_t k) {
    check_point(n, k);
    return double(std::min(k, n - k));
}

double classic_workfactor_log2(std::size_t n, std::size_t k, std::size_t t) {
    return isd_expected_iterations(n, k, t).log2_tau;
}

std::vector<ComparisonRow> comparison_table(std::span<const ParameterPairing> pairs) {
    std::vector<ComparisonRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [cl, nw] : pairs) {
        ComparisonRow row;
        row.classic_point = cl;
        row.new_point = nw;
        row.classic_key_bits = classic_key_bits(cl.n, cl.k);
        row.new_key_bits = new_key_bits(nw.n, nw.k);
        row.classic_workfactor = classic_workfactor_log2(cl.n, cl.k, cl.t);
        row.new_workfactor = new_workfactor_log2(nw.n, nw.k);
        row.ratio = double(row.classic_key_bits) / double(row.new_key_bits);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ParameterPairing> benchmark_pairings() {
    using S = ParameterPoint::Scheme;
    return {
        {{1024, 524, 50, S::classic}, {127, 71, 9, S::arbitrary_error}},
        {{2048, 1751, 27, S::classic}, {255, 79, 27, S::arbitrary_error}},
        {{6960, 5413, 119, S::classic}, {1023, 268, 103, S::arbitrary_error}},
    };
}

std::string format_comparison_text(std::span<const ComparisonRow> rows) {
    char buf[256];
    std::string out =
        "  classic (n,k,t)      key bits   wf     masked (n,k,t)     key bits   wf     ratio\n";
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "  (%zu,%zu,%u)%*s%9llu %6.1f     (%zu,%zu,%u)%*s%9llu %6.1f %9.2f\n",
                      r.classic_point.n, r.classic_point.k, r.classic_point.t,
                      int(16 - std::snprintf(nullptr, 0, "(%zu,%zu,%u)",
                                             r.classic_point.n, r.classic_point.k,
                                             r.classic_point.t)), "",
                      (unsigned long long)r.classic_key_bits, r.classic_workfactor,
                      r.new_point.n, r.new_point.k, r.new_point.t,
                      int(15 - std::snprintf(nullptr, 0, "(%zu,%zu,%u)",
                                             r.new_point.n, r.new_point.k,
                                             r.new_point.t)), "",
                      (unsigned long long)r.new_key_bits, r.new_workfactor, r.ratio);
        out += buf;
    }
    return out;
}

std::string format_comparison_records(std::span<const ComparisonRow> rows) {
    std::string out;
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "pair classic_n %zu classic_k %zu classic_t %u classic_key_bits %llu "
                      "classic_wf %.2f new_n %zu new_k %zu new_t %u new_key_bits %llu "
                      "new_wf %.2f ratio %.2f\n",
                      r.classic_point.n, r.classic_point.k, r.classic_point.t,
                      (unsigned long long)r.classic_key_bits, r.classic_workfactor,
                      r.new_point.n, r.new_point.k, r.new_point.t,
                      (unsigned long long)r.new_key_bits, r.new_workfactor, r.ratio);
        out += buf;
    }
    return out;
}

} // namespace arbc
