#pragma once

#include <string>
#include <vector>

#include "dyckl/oracle.hpp"

namespace dyckl::verify {

// Named pass/fail results produced by the verification suites. `detail`
// carries a short diagnostic when a check fails.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// --- figure-level golden checks -----------------------------------------

// The five semilength-3 paths with their L values and full Catalan-word
// lists (checked up to reordering).
std::vector<CheckResult> check_fig_catwords(
    const OracleLimits& limits = default_limits());

// Closed-form sequences for k in {1,2,3,4,5,7}, first 8-9 terms each.
std::vector<CheckResult> check_count_table();

// The nine Dyck/Motzkin pairs of the L = 1 correspondence at n = 5,
// including their r-s arrays.
std::vector<CheckResult> check_fig_L1();

// The six rows of the L = 2 correspondence at n = 6: star words, ascent and
// descent sequences, r-s arrays, and the (M, j) preimages.
std::vector<CheckResult> check_fig_L2();

// The eight one-return constructions for M = uudhudd, P = uhuhhdhhdudud,
// r = 3, s = 4.
std::vector<CheckResult> check_fig_one_return_table();

// --- property suites ------------------------------------------------------

// Roundtrips, image sizes, and partition checks for all six constructive
// bijections (single-star families up to n_max_rs, L = 4 families up to
// n_max_l4), plus the star-word correspondence itself.
std::vector<CheckResult> check_bijections(int n_max_rs = 10,
                                          int n_max_l4 = 11);

// enum_321_3cycle(3n) equals the weighted sum over D_n for n = 1..n_max.
std::vector<CheckResult> check_eq1(
    int n_max = 3, const OracleLimits& limits = default_limits());

// m = 1 + x m + x^2 m^2 exactly through the given order.
std::vector<CheckResult> check_motzkin_functional_eq(int order = 20);

// Generating-function identities: the Motzkin functional equation, ballot
// coefficients vs exhaustive counts, and GF vs closed-form agreement.
std::vector<CheckResult> check_gf(int order = 20);

// Exhaustive L-histogram vs closed forms for every n <= n_max.
std::vector<CheckResult> check_histogram_threeway(
    int n_max = 12, const OracleLimits& limits = default_limits());

// The hybrid L = 6 count against the published totals and mixed-case terms
// for n = 4..12.
std::vector<CheckResult> check_l6_sequences(
    const OracleLimits& limits = default_limits());

// words_matching(D) = L(D) for every D in D_n, n <= n_max, and the total
// over D_n equals C(3n,n)/(2n+1).
std::vector<CheckResult> check_central_identity(
    int n_max = 5, const OracleLimits& limits = default_limits());

// count_rs depends only on r+s.
std::vector<CheckResult> check_rs_sum_dependence(int n_max = 14,
                                                 int rs_max = 7);

// Histogram identical across worker counts.
std::vector<CheckResult> check_histogram_determinism(
    int n = 10, const OracleLimits& limits = default_limits());

// --- CLI suites -----------------------------------------------------------

std::vector<CheckResult> suite_figures(
    const OracleLimits& limits = default_limits());
std::vector<CheckResult> suite_bijections(int n_max_rs = 10,
                                          int n_max_l4 = 11);
std::vector<CheckResult> suite_eq1(
    int n_max = 3, const OracleLimits& limits = default_limits());
std::vector<CheckResult> suite_gf(int order = 20);
std::vector<CheckResult> suite_all(
    const OracleLimits& limits = default_limits(), int hist_n_max = 12);

} // namespace dyckl::verify
