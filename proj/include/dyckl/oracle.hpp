#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "dyckl/bigint.hpp"
#include "dyckl/words.hpp"

namespace dyckl {

// Independent brute-force generators and verifiers. Enumeration order is
// canonical (lexicographic in the path alphabet u < h < d, x < y < z), so
// streamed output is diffable. Exceeding a configured bound is an explicit
// OracleBoundError, never silent truncation.

struct OracleLimits {
    int max_dyck_semilength = 14;
    int max_catalan_words_n = 6;
    int max_perm_length = 9;
};

const OracleLimits& default_limits();

// All Dyck words of semilength n in lexicographic order (u before d).
void for_each_dyck(int n, const std::function<void(const DyckWord&)>& fn,
                   const OracleLimits& limits = default_limits());
std::vector<DyckWord> enum_dyck(int n,
                                const OracleLimits& limits = default_limits());

// Motzkin enumeration used for ballot-number cross-checks and bijection
// domain enumeration (u < h < d order). Desk-scale only; no bound knob.
void for_each_motzkin(int len,
                      const std::function<void(const MotzkinWord&)>& fn);
std::vector<MotzkinWord> enum_motzkin(int len);

// Members of T_{len,k}: first down in position k, including the
// all-horizontal member of T_{k-1,k}.
std::vector<MotzkinWord> enum_ballot(int len, int k);

// Exhaustive histogram of L over D_n. Counting may be partitioned over
// parallel workers; the result is identical for every worker count.
std::map<Int, long long> l_histogram(
    int n, int workers = 1, const OracleLimits& limits = default_limits());

// Joint (L, returns) histogram over D_n.
std::map<std::pair<Int, int>, long long> l_returns_histogram(
    int n, const OracleLimits& limits = default_limits());

// All 3-dimensional Catalan words of length 3n (x < y < z order).
std::vector<CatalanWord> enum_catalan_words(
    int n, const OracleLimits& limits = default_limits());

// Projections onto the {x,y} and {y,z} subwords (x->u, y->d resp.
// y->u, z->d).
DyckWord d_xy(const CatalanWord& c);
DyckWord d_yz(const CatalanWord& c);

// Catalan words whose two projections both equal d, and their count.
std::vector<CatalanWord> matching_words(
    const DyckWord& d, const OracleLimits& limits = default_limits());
Int words_matching(const DyckWord& d,
                   const OracleLimits& limits = default_limits());

// Number of 321-avoiding permutations of 1..m composed only of 3-cycles.
// m must be a positive multiple of 3.
Int enum_321_3cycle(int m, const OracleLimits& limits = default_limits());

// Number of Dyck words in D_n whose star columns produce exactly the given
// multiset of binomial factors (the empty signature counts L = 1 paths).
Int filter_by_star_signature(int n, std::vector<Int> signature,
                             const OracleLimits& limits = default_limits());

} // namespace dyckl
