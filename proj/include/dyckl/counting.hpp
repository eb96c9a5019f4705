#pragma once

#include <string>

#include "dyckl/bigint.hpp"
#include "dyckl/oracle.hpp"

namespace dyckl {

// Closed-form counting of |D_n^k| and |D_n^{r,s}|. Conventions for
// negative indices (M_n = T_{n,k} = 0, C(a,b) = 0 outside range) are
// inherited from the series module, which makes every formula below valid
// down to its smallest n without case splits.

// |D_n^1| = M_{n-1}.
Int count_L1(int n);

// |D_n^{r,s}| = T_{n-2,r+s-1} + sum_{i=0}^{n-2-s-r} (i+1) M_i T_{n-4-i,r+s-1}.
Int count_rs(int n, int r, int s);

// |D_2^2| = 1, |D_3^2| = 0, |D_n^2| = (n-3) M_{n-4} for n >= 4.
Int count_L2(int n);

// |D_n^p| = 2 |D_n^{1,p-1}| for odd primes p; throws NotPrimeError.
Int count_Lp(int n, long long p);

// |D_3^4| = 1; for n >= 4 the four-class formula
// 2(T_{n-2,3} + sum (i+1) M_i T_{n-4-i,3}) + C(n-5,2) M_{n-7} + M_{n-5}
// + 2 sum (i+1) M_i M_{n-7-i}.
Int count_L4(int n);

// |D_n^6| = 2|D_n^{1,5}| + |D_n^{2,2}| + mixed(n), where the mixed {2,3}
// component has no closed form and is counted by exhaustive search.
struct L6Breakdown {
    Int pair_15; // 2 * |D_n^{1,5}|, closed form
    Int pair_22; // |D_n^{2,2}|, closed form
    Int mixed;   // binomial multiset {2,3}, brute-forced
    Int total;
};

L6Breakdown count_L6(int n, const OracleLimits& limits = default_limits());

// sum over D in D_n of L(D) * 2^returns(D); brute-forced.
Int weighted_sum_eq1(int n, const OracleLimits& limits = default_limits());

// Dispatcher used by the CLI: which route produced the count.
enum class CountMethod { ClosedForm, HybridOracleMixed, OracleOnly };

struct CountValue {
    Int value;
    CountMethod method;
};

// Closed form for k in {1, 2, 4, primes}, hybrid for k = 6, otherwise the
// exhaustive histogram (no closed form implemented).
CountValue count_L(int n, long long k,
                   const OracleLimits& limits = default_limits());

std::string method_name(CountMethod m);

} // namespace dyckl
