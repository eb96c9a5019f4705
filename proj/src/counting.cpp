#include "dyckl/counting.hpp"

#include "dyckl/series.hpp"

namespace dyckl {

Int count_L1(int n) {
    if (n < 1) throw Error("count_L1 requires n >= 1");
    return motzkin_number(n - 1);
}

Int count_rs(int n, int r, int s) {
    if (r < 1 || s < 1) throw Error("r and s must be >= 1");
    if (n < r + s) return 0;
    const int k = r + s - 1;
    const std::vector<Int> m = motzkin_numbers(std::max(n, 0));
    Int total = ballot_number(n - 2, k);
    for (int i = 0; i <= n - 2 - s - r; ++i)
        total += (i + 1) * m[i] * ballot_number(n - 4 - i, k);
    return total;
}

Int count_L2(int n) {
    if (n < 2) return 0;
    if (n == 2) return 1;
    if (n == 3) return 0;
    return (n - 3) * motzkin_number(n - 4);
}

Int count_Lp(int n, long long p) {
    require_odd_prime(p);
    return 2 * count_rs(n, 1, static_cast<int>(p) - 1);
}

Int count_L4(int n) {
    if (n < 3) return 0;
    if (n == 3) return 1;
    const std::vector<Int> m = motzkin_numbers(n);
    Int one_star = ballot_number(n - 2, 3);
    for (int i = 0; i <= n - 6; ++i)
        one_star += (i + 1) * m[i] * ballot_number(n - 4 - i, 3);
    Int pairs = 0;
    for (int i = 0; i <= n - 7; ++i) pairs += (i + 1) * m[i] * m[n - 7 - i];
    return 2 * one_star + binomial(n - 5, 2) * motzkin_number(n - 7) +
           motzkin_number(n - 5) + 2 * pairs;
}

L6Breakdown count_L6(int n, const OracleLimits& limits) {
    L6Breakdown out{0, 0, 0, 0};
    if (n < 4) return out; // L = 6 first occurs at n = 4
    out.pair_15 = 2 * count_rs(n, 1, 5);
    out.pair_22 = count_rs(n, 2, 2);
    out.mixed = filter_by_star_signature(n, {Int(2), Int(3)}, limits);
    out.total = out.pair_15 + out.pair_22 + out.mixed;
    return out;
}

Int weighted_sum_eq1(int n, const OracleLimits& limits) {
    Int total = 0;
    for_each_dyck(
        n,
        [&](const DyckWord& d) {
            total += l_statistic(d) * (Int(1) << returns(d));
        },
        limits);
    return total;
}

CountValue count_L(int n, long long k, const OracleLimits& limits) {
    if (k == 1) return {count_L1(n), CountMethod::ClosedForm};
    if (k == 2) return {count_L2(n), CountMethod::ClosedForm};
    if (k == 4) return {count_L4(n), CountMethod::ClosedForm};
    if (k == 6) return {count_L6(n, limits).total, CountMethod::HybridOracleMixed};
    if (k >= 3 && k % 2 == 1 && is_prime(k))
        return {count_Lp(n, k), CountMethod::ClosedForm};
    // No closed form implemented for this k; fall back to the histogram.
    const auto hist = l_histogram(n, 1, limits);
    const auto it = hist.find(Int(k));
    return {it == hist.end() ? Int(0) : Int(it->second),
            CountMethod::OracleOnly};
}

std::string method_name(CountMethod m) {
    switch (m) {
        case CountMethod::ClosedForm: return "closed-form";
        case CountMethod::HybridOracleMixed: return "hybrid-oracle-mixed";
        case CountMethod::OracleOnly: return "oracle";
    }
    return "unknown";
}

} // namespace dyckl
