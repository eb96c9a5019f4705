#pragma once

#include "dyckl/words.hpp"

namespace dyckl {

// The correspondence between Dyck paths of semilength n and star words of
// length n-1, together with the constructive bijections that enumerate the
// single-star classes D_n^{r,s} (by number of returns) and the four
// two-star classes with L = 4. Every map here comes with an explicit
// inverse; the inverses validate their domain and fail loudly.

// -------------------------------------------------------------------------
// D <-> M*_D
// -------------------------------------------------------------------------

// Letter i of the result reads off column i of the r-s array: '*' when
// r_i, s_i > 0, 'u' when only s_i > 0, 'd' when only r_i > 0, 'h' otherwise.
// Requires semilength >= 1; the result has length n-1.
StarWord to_star_word(const DyckWord& d);

// Inverse of to_star_word: ascents sit at the {d,*} positions plus n,
// descents at the {u,*} positions plus n.
DyckWord from_star_word(const StarWord& w);

// -------------------------------------------------------------------------
// Ballot-path split/join
// -------------------------------------------------------------------------

// A Motzkin path split at the r-th entry: p_r has its first down at
// position r (or is h^{r-1}) and p_s has its first down at position s
// (or is h^{s-1}).
struct BallotPair {
    MotzkinWord p_r;
    MotzkinWord p_s;
    int r = 1;
    int s = 1;

    bool operator==(const BallotPair&) const = default;
};

// Splits P (first down at position r+s-1, or all-horizontal of length
// r+s-2) into the pair (P_r, P_s): P_s is the maximal Motzkin subpath of P
// beginning at the r-th entry, P_r is what remains.
BallotPair split_ballot(const MotzkinWord& p, int r, int s);

// Inverse of split_ballot: inserts p_s after the (r-1)-st entry of p_r.
MotzkinWord join_ballot(const BallotPair& pair);

// -------------------------------------------------------------------------
// D_n^{r,s} with two returns  <->  T_{n-2, r+s-1}
// -------------------------------------------------------------------------

// Builds M* = reverse(P_r) '*' P_s from the split of P and returns the
// corresponding Dyck path; it lies in D_n^{r,s} (n = |P| + 2) and has
// exactly two returns.
DyckWord rs_two_returns_forward(const MotzkinWord& p, int r, int s);

struct RsTwoReturnsPreimage {
    MotzkinWord p;
    int r = 1;
    int s = 1;
};

// Requires a Dyck path whose star word has exactly one star and which has
// exactly two returns; recovers (P, r, s).
RsTwoReturnsPreimage rs_two_returns_inverse(const DyckWord& d);

// -------------------------------------------------------------------------
// D_n^{r,s} with one return  <->  (M, P, j)
// -------------------------------------------------------------------------

// Places a star before entry j of M (at the end for j = |M|+1), inserts
// 'd' P_s before the (x+1)-st down (x = ups before the star) and
// reverse(P_r) 'u' after the y-th up (y = downs before the star). The
// result lies in D_n^{r,s} (n = |M| + |P| + 4) and has one return.
DyckWord rs_one_return_forward(const MotzkinWord& m, const MotzkinWord& p,
                               int j, int r, int s);

struct RsOneReturnPreimage {
    MotzkinWord m;
    MotzkinWord p;
    int j = 1;
    int r = 1;
    int s = 1;
};

// Requires a Dyck path whose star word has exactly one star and which has
// its only return at the end; recovers (M, P, j, r, s).
RsOneReturnPreimage rs_one_return_inverse(const DyckWord& d);

// -------------------------------------------------------------------------
// Two-star words with L = 4
// -------------------------------------------------------------------------

// True iff the two-star word satisfies the four adjacency criteria that
// force both star columns of the r-s array to be (1,1); equivalently
// L(from_star_word(w)) = 4 with both star columns equal to (1,1).
// Throws WrongStarCountError unless w has exactly two stars.
bool dm_check(const StarWord& w);

// Class with x_1 not in {y_2, y_2 + 1}; domain M in M_{n-7},
// 1 <= j1 < j2 <= n-5. Image size C(n-5, 2) M_{n-7}.
DyckWord l4_type1_forward(const MotzkinWord& m, int j1, int j2);

struct L4Type1Preimage {
    MotzkinWord m;
    int j1 = 1;
    int j2 = 2;
};

L4Type1Preimage l4_type1_inverse(const DyckWord& d);

// Class with x_1 = 1 and y_2 = 0; domain M in M_{n-5}. Image size M_{n-5}.
DyckWord l4_type2_forward(const MotzkinWord& m);

MotzkinWord l4_type2_inverse(const DyckWord& d);

// Preimage shared by the type-3 and type-4 classes.
struct L4PairPreimage {
    MotzkinWord m;
    MotzkinWord p;
    int j = 1;
};

// Class with x_1 = y_2 + 1 >= 2; domain M in M_i, P in M_{n-7-i},
// 1 <= j <= i+1. Image size sum_i (i+1) M_i M_{n-7-i}.
DyckWord l4_type3_forward(const MotzkinWord& m, const MotzkinWord& p, int j);

L4PairPreimage l4_type3_inverse(const DyckWord& d);

// Class with x_1 = y_2; same domain and image size as type 3, plus the
// single n = 3 path ududud (star word "**") handled as a special case.
DyckWord l4_type4_forward(const MotzkinWord& m, const MotzkinWord& p, int j);

DyckWord l4_type4_singleton();

struct L4Type4Preimage {
    bool singleton = false; // true for the n = 3 path; m/p/j unset then
    MotzkinWord m;
    MotzkinWord p;
    int j = 1;
};

L4Type4Preimage l4_type4_inverse(const DyckWord& d);

} // namespace dyckl
