#include "dyckl/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace dyckl {

namespace {

using Letters = std::vector<StarLetter>;

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool is_up(StarLetter l) { return l == StarLetter::Up; }
bool is_down(StarLetter l) { return l == StarLetter::Down; }
bool is_star(StarLetter l) { return l == StarLetter::Star; }
bool is_up_or_star(StarLetter l) { return is_up(l) || is_star(l); }
bool is_down_or_star(StarLetter l) { return is_down(l) || is_star(l); }

Letters letters_of(const MotzkinWord& m) { return StarWord(m).letters(); }

// Letters in [begin, end) reinterpreted as a Motzkin word; a stray star in
// the range means the caller misidentified a segment.
MotzkinWord motzkin_slice(const Letters& w, std::size_t begin,
                          std::size_t end) {
    std::vector<MotzkinStep> steps;
    steps.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        switch (w[i]) {
            case StarLetter::Up: steps.push_back(MotzkinStep::Up); break;
            case StarLetter::Flat: steps.push_back(MotzkinStep::Flat); break;
            case StarLetter::Down: steps.push_back(MotzkinStep::Down); break;
            case StarLetter::Star:
                throw DomainError("star letter inside a Motzkin segment");
        }
    }
    return MotzkinWord(std::move(steps));
}

// 0-based position of the k-th letter matching pred; npos if absent.
template <typename Pred>
std::size_t kth_pos(const Letters& w, Pred pred, int k) {
    if (k <= 0) return npos;
    int seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (pred(w[i]) && ++seen == k) return i;
    return npos;
}

// The shared positional primitive for every "insert before the k-th X or at
// the end" clause: insertion index is the k-th match when it exists, the end
// of the word otherwise.
template <typename Pred>
std::size_t index_before_kth(const Letters& w, Pred pred, int k) {
    std::size_t p = kth_pos(w, pred, k);
    return p == npos ? w.size() : p;
}

// Likewise for "insert after the k-th X or at the beginning if k = 0".
template <typename Pred>
std::size_t index_after_kth(const Letters& w, Pred pred, int k) {
    if (k == 0) return 0;
    std::size_t p = kth_pos(w, pred, k);
    if (p == npos)
        throw DomainError("required occurrence " + std::to_string(k) +
                          " not present");
    return p + 1;
}

int count_if_before(const Letters& w, std::size_t end, bool (*pred)(StarLetter)) {
    int c = 0;
    for (std::size_t i = 0; i < end && i < w.size(); ++i)
        if (pred(w[i])) ++c;
    return c;
}

// Length of the longest prefix of w[start..] that is a Motzkin word
// (a star terminates the scan).
int max_motzkin_prefix_len(const Letters& w, std::size_t start) {
    int height = 0;
    int best = 0;
    for (std::size_t i = start; i < w.size(); ++i) {
        if (is_star(w[i])) break;
        if (is_up(w[i])) ++height;
        else if (is_down(w[i])) --height;
        if (height < 0) break;
        if (height == 0) best = static_cast<int>(i - start + 1);
    }
    return best;
}

// Length of the longest suffix of w[..end) that is a Motzkin word.
int max_motzkin_suffix_len(const Letters& w, std::size_t end) {
    int height = 0;
    int best = 0;
    for (std::size_t i = end; i-- > 0;) {
        if (is_star(w[i])) break;
        if (is_down(w[i])) ++height;
        else if (is_up(w[i])) --height;
        if (height < 0) break;
        if (height == 0) best = static_cast<int>(end - i);
    }
    return best;
}

void erase_positions(Letters& w, std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) !=
        positions.end())
        throw DomainError("deletion positions collide");
    for (auto it = positions.rbegin(); it != positions.rend(); ++it)
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(*it));
}

std::size_t require_pos(std::size_t p, const char* what) {
    if (p == npos) throw DomainError(std::string("missing ") + what);
    return p;
}

// First down at position k, or the all-horizontal word of length k-1.
void require_ballot_member(const MotzkinWord& m, int k, const char* name) {
    const int fd = first_down_pos(m);
    const bool ok = fd == 0 ? m.size() == k - 1 : fd == k;
    if (!ok)
        throw BallotPreconditionError(
            std::string(name) + " must have its first down in position " +
            std::to_string(k) + " (or be h^" + std::to_string(k - 1) + ")");
}

StarContext two_star_context(const StarWord& w) {
    if (w.star_count() != 2)
        throw WrongStarCountError("expected exactly two stars, found " +
                                  std::to_string(w.star_count()));
    return star_context(w);
}

// Domain guard shared by the four L=4 inverses: exactly two stars and both
// star columns of the r-s array equal to (1,1).
StarContext require_dhat_member(const DyckWord& d, const StarWord& w) {
    StarContext ctx = two_star_context(w);
    const RSArray rs = rs_array(d);
    for (const auto& star : ctx.stars) {
        const auto& col = rs.cols[star.pos - 1];
        if (col.first != 1 || col.second != 1)
            throw DomainError("star column (" + std::to_string(col.first) +
                              "," + std::to_string(col.second) +
                              ") is not (1,1)");
    }
    return ctx;
}

} // namespace

// -------------------------------------------------------------------------
// D <-> M*_D
// -------------------------------------------------------------------------

StarWord to_star_word(const DyckWord& d) {
    if (d.semilength() < 1)
        throw DomainError("to_star_word requires semilength >= 1");
    const RSArray rs = rs_array(d);
    Letters out;
    out.reserve(rs.cols.size());
    for (const auto& [r, s] : rs.cols) {
        if (r > 0 && s > 0) out.push_back(StarLetter::Star);
        else if (s > 0) out.push_back(StarLetter::Up);
        else if (r > 0) out.push_back(StarLetter::Down);
        else out.push_back(StarLetter::Flat);
    }
    return StarWord(std::move(out));
}

DyckWord from_star_word(const StarWord& w) {
    const int n = w.size() + 1;
    AscDesc ad;
    const auto& letters = w.letters();
    for (int i = 0; i < w.size(); ++i) {
        if (is_down_or_star(letters[i])) ad.asc.push_back(i + 1);
        if (is_up_or_star(letters[i])) ad.des.push_back(i + 1);
    }
    ad.asc.push_back(n);
    ad.des.push_back(n);
    assert(ad.asc.size() == ad.des.size());
    for (std::size_t i = 0; i < ad.asc.size(); ++i)
        assert(ad.asc[i] >= ad.des[i]);
    return dyck_from_asc_desc(ad);
}

// -------------------------------------------------------------------------
// Ballot split/join
// -------------------------------------------------------------------------

BallotPair split_ballot(const MotzkinWord& p, int r, int s) {
    if (r < 1 || s < 1)
        throw BallotPreconditionError("r and s must be >= 1");
    require_ballot_member(p, r + s - 1, "P");
    const Letters w = letters_of(p);
    const std::size_t start = static_cast<std::size_t>(r - 1);
    const int len = max_motzkin_prefix_len(w, start);
    Letters ps(w.begin() + static_cast<std::ptrdiff_t>(start),
               w.begin() + static_cast<std::ptrdiff_t>(start) + len);
    Letters pr(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
    pr.insert(pr.end(), w.begin() + static_cast<std::ptrdiff_t>(start) + len,
              w.end());
    BallotPair pair{motzkin_slice(pr, 0, pr.size()),
                    motzkin_slice(ps, 0, ps.size()), r, s};
    require_ballot_member(pair.p_r, r, "P_r");
    require_ballot_member(pair.p_s, s, "P_s");
    return pair;
}

MotzkinWord join_ballot(const BallotPair& pair) {
    require_ballot_member(pair.p_r, pair.r, "p_r");
    require_ballot_member(pair.p_s, pair.s, "p_s");
    const Letters a = letters_of(pair.p_r);
    const Letters b = letters_of(pair.p_s);
    Letters out(a.begin(), a.begin() + (pair.r - 1));
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), a.begin() + (pair.r - 1), a.end());
    MotzkinWord joined = motzkin_slice(out, 0, out.size());
    require_ballot_member(joined, pair.r + pair.s - 1, "joined path");
    return joined;
}

// -------------------------------------------------------------------------
// Two returns
// -------------------------------------------------------------------------

DyckWord rs_two_returns_forward(const MotzkinWord& p, int r, int s) {
    const BallotPair pair = split_ballot(p, r, s);
    Letters out = letters_of(reverse_motzkin(pair.p_r));
    out.push_back(StarLetter::Star);
    const Letters ps = letters_of(pair.p_s);
    out.insert(out.end(), ps.begin(), ps.end());
    return from_star_word(StarWord(std::move(out)));
}

RsTwoReturnsPreimage rs_two_returns_inverse(const DyckWord& d) {
    const StarWord w = to_star_word(d);
    if (w.star_count() != 1)
        throw DomainError("expected exactly one star, found " +
                          std::to_string(w.star_count()));
    const StarContext ctx = star_context(w);
    const auto& star = ctx.stars.front();
    if (star.ups != star.downs)
        throw DomainError("path does not have two returns");
    const RSArray rs = rs_array(d);
    const auto& [r, s] = rs.cols[star.pos - 1];
    const Letters& letters = w.letters();
    const std::size_t k = static_cast<std::size_t>(star.pos - 1);
    MotzkinWord m_r = motzkin_slice(letters, 0, k);
    MotzkinWord m_s = motzkin_slice(letters, k + 1, letters.size());
    MotzkinWord p = join_ballot({reverse_motzkin(m_r), m_s, r, s});
    return {std::move(p), r, s};
}

// -------------------------------------------------------------------------
// One return
// -------------------------------------------------------------------------

DyckWord rs_one_return_forward(const MotzkinWord& m, const MotzkinWord& p,
                               int j, int r, int s) {
    if (j < 1 || j > m.size() + 1)
        throw IndexOutOfRangeError("j must lie in [1, " +
                                   std::to_string(m.size() + 1) + "]");
    const BallotPair pair = split_ballot(p, r, s);

    Letters mbar = letters_of(m);
    mbar.insert(mbar.begin() + (j - 1), StarLetter::Star);
    const int xbar = count_if_before(mbar, j - 1, is_up);
    const int ybar = count_if_before(mbar, j - 1, is_down);

    const std::size_t pos_d = index_before_kth(mbar, is_down, xbar + 1);
    const std::size_t pos_u = index_after_kth(mbar, is_up, ybar);
    assert(pos_u <= static_cast<std::size_t>(j - 1) &&
           static_cast<std::size_t>(j - 1) < pos_d);

    Letters out(mbar.begin(), mbar.begin() + static_cast<std::ptrdiff_t>(pos_u));
    const Letters pr_rev = letters_of(reverse_motzkin(pair.p_r));
    out.insert(out.end(), pr_rev.begin(), pr_rev.end());
    out.push_back(StarLetter::Up);
    out.insert(out.end(), mbar.begin() + static_cast<std::ptrdiff_t>(pos_u),
               mbar.begin() + static_cast<std::ptrdiff_t>(pos_d));
    out.push_back(StarLetter::Down);
    const Letters ps = letters_of(pair.p_s);
    out.insert(out.end(), ps.begin(), ps.end());
    out.insert(out.end(), mbar.begin() + static_cast<std::ptrdiff_t>(pos_d),
               mbar.end());
    return from_star_word(StarWord(std::move(out)));
}

RsOneReturnPreimage rs_one_return_inverse(const DyckWord& d) {
    const StarWord w = to_star_word(d);
    if (w.star_count() != 1)
        throw DomainError("expected exactly one star, found " +
                          std::to_string(w.star_count()));
    const StarContext ctx = star_context(w);
    const auto& star = ctx.stars.front();
    const int x = star.ups;
    const int y = star.downs;
    if (x <= y)
        throw DomainError("path does not have its only return at the end");
    const RSArray rs = rs_array(d);
    const auto& [r, s] = rs.cols[star.pos - 1];

    Letters letters = w.letters();

    // The (x+1)-st d-or-* is the d inserted by the forward step; P_s follows.
    const std::size_t pos_d =
        require_pos(kth_pos(letters, is_down_or_star, x + 1), "(x+1)-st down");
    if (!is_down(letters[pos_d]))
        throw DomainError("(x+1)-st down-or-star occurrence is not a down");
    const int len_s = max_motzkin_prefix_len(letters, pos_d + 1);
    MotzkinWord p_s = motzkin_slice(letters, pos_d + 1, pos_d + 1 + len_s);

    // The (y+1)-st u is the inserted u; reverse(P_r) precedes it.
    const std::size_t pos_u =
        require_pos(kth_pos(letters, is_up, y + 1), "(y+1)-st up");
    const int len_r = max_motzkin_suffix_len(letters, pos_u);
    MotzkinWord p_r =
        reverse_motzkin(motzkin_slice(letters, pos_u - len_r, pos_u));

    require_ballot_member(p_s, s, "extracted P_s");
    require_ballot_member(p_r, r, "extracted P_r");

    // Remove d + P_s, then reverse(P_r) + u; the star stays to mark j.
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos_d),
                  letters.begin() + static_cast<std::ptrdiff_t>(pos_d) + 1 +
                      len_s);
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos_u) - len_r,
                  letters.begin() + static_cast<std::ptrdiff_t>(pos_u) + 1);

    const std::size_t star_idx = require_pos(
        kth_pos(letters, is_star, 1), "star in the reduced word");
    const int j = static_cast<int>(star_idx) + 1;
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(star_idx));
    MotzkinWord m = motzkin_slice(letters, 0, letters.size());
    MotzkinWord p = join_ballot({std::move(p_r), std::move(p_s), r, s});
    return {std::move(m), std::move(p), j, r, s};
}

// -------------------------------------------------------------------------
// L = 4, two stars
// -------------------------------------------------------------------------

bool dm_check(const StarWord& w) {
    const StarContext ctx = two_star_context(w);
    const Letters& letters = w.letters();
    const int x1 = ctx.stars[0].ups, y1 = ctx.stars[0].downs;
    const int x2 = ctx.stars[1].ups, y2 = ctx.stars[1].downs;
    const int total_downs =
        static_cast<int>(std::count_if(letters.begin(), letters.end(), is_down));

    const auto followed_by = [&](std::size_t pos, bool (*pred)(StarLetter)) {
        return pos != npos && pos + 1 < letters.size() && pred(letters[pos + 1]);
    };

    const bool b1 =
        followed_by(kth_pos(letters, is_down_or_star, x1 + 1), is_down_or_star);
    const bool b2 =
        followed_by(kth_pos(letters, is_down_or_star, x2 + 2),
                    is_down_or_star) ||
        (x2 == total_downs && is_down_or_star(letters.back()));
    const bool b3 =
        y1 == 0 ? is_up_or_star(letters.front())
                : followed_by(kth_pos(letters, is_up_or_star, y1),
                              is_up_or_star);
    const bool b4 =
        followed_by(kth_pos(letters, is_up_or_star, y2 + 1), is_up_or_star);
    return b1 && b2 && b3 && b4;
}

DyckWord l4_type1_forward(const MotzkinWord& m, int j1, int j2) {
    const int len = m.size();
    if (!(1 <= j1 && j1 < j2 && j2 <= len + 2))
        throw IndexOutOfRangeError("need 1 <= j1 < j2 <= " +
                                   std::to_string(len + 2));
    const Letters mm = letters_of(m);
    Letters w;
    w.reserve(len + 2);
    {
        auto src = mm.begin();
        for (int pos = 1; pos <= len + 2; ++pos) {
            if (pos == j1 || pos == j2) w.push_back(StarLetter::Star);
            else w.push_back(*src++);
        }
    }
    const int x1 = count_if_before(w, j1 - 1, is_up);
    const int y1 = count_if_before(w, j1 - 1, is_down);
    const int x2 = count_if_before(w, j2 - 1, is_up);
    const int y2 = count_if_before(w, j2 - 1, is_down);

    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_before_kth(w, is_down, x2 + 1)),
             StarLetter::Down);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_before_kth(w, is_down, x1 + 1)),
             StarLetter::Down);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_after_kth(w, is_up, y2)),
             StarLetter::Up);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_after_kth(w, is_up, y1)),
             StarLetter::Up);
    return from_star_word(StarWord(std::move(w)));
}

L4Type1Preimage l4_type1_inverse(const DyckWord& d) {
    const StarWord sw = to_star_word(d);
    const StarContext ctx = require_dhat_member(d, sw);
    const int x1 = ctx.stars[0].ups, y1 = ctx.stars[0].downs;
    const int x2 = ctx.stars[1].ups, y2 = ctx.stars[1].downs;
    if (x1 == y2 || x1 == y2 + 1)
        throw DomainError("x1 must differ from y2 and y2+1");

    Letters letters = sw.letters();
    int d_hi, d_lo, u_hi, u_lo;
    if (x1 < y2) {
        d_hi = x2; d_lo = x1;
        u_hi = y2 + 1; u_lo = y1 + 1;
    } else { // x1 >= y2 + 2
        d_hi = x2; d_lo = x1 - 1;
        u_hi = y2 + 2; u_lo = y1 + 1;
    }
    erase_positions(
        letters,
        {require_pos(kth_pos(letters, is_down, d_hi), "inserted down"),
         require_pos(kth_pos(letters, is_down, d_lo), "inserted down"),
         require_pos(kth_pos(letters, is_up, u_hi), "inserted up"),
         require_pos(kth_pos(letters, is_up, u_lo), "inserted up")});

    const std::size_t s1 = require_pos(kth_pos(letters, is_star, 1), "star");
    const std::size_t s2 = require_pos(kth_pos(letters, is_star, 2), "star");
    L4Type1Preimage pre;
    pre.j1 = static_cast<int>(s1) + 1;
    pre.j2 = static_cast<int>(s2) + 1;
    erase_positions(letters, {s1, s2});
    pre.m = motzkin_slice(letters, 0, letters.size());
    return pre;
}

DyckWord l4_type2_forward(const MotzkinWord& m) {
    Letters w = letters_of(m);
    int xbar = 0;
    for (StarLetter l : w) {
        if (is_down(l)) break;
        if (is_up(l)) ++xbar;
    }
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_before_kth(w, is_down, xbar + 1)),
             StarLetter::Down);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_before_kth(w, is_down, 1)),
             StarLetter::Star);
    w.insert(w.begin(), {StarLetter::Up, StarLetter::Star});
    return from_star_word(StarWord(std::move(w)));
}

MotzkinWord l4_type2_inverse(const DyckWord& d) {
    const StarWord sw = to_star_word(d);
    const StarContext ctx = require_dhat_member(d, sw);
    if (ctx.stars[0].ups != 1 || ctx.stars[1].downs != 0)
        throw DomainError("requires x1 = 1 and y2 = 0");
    const int x2 = ctx.stars[1].ups;
    Letters letters = sw.letters();
    erase_positions(
        letters,
        {require_pos(kth_pos(letters, is_down, x2), "inserted down"),
         require_pos(kth_pos(letters, is_up, 1), "leading up"),
         static_cast<std::size_t>(ctx.stars[0].pos - 1),
         static_cast<std::size_t>(ctx.stars[1].pos - 1)});
    return motzkin_slice(letters, 0, letters.size());
}

namespace {

// Shared core of the type-3/type-4 constructions: the four-letter block
// around P goes in before entry j of M, then a second star, an up and a
// down are keyed off the first star's context.
DyckWord l4_pair_forward(const MotzkinWord& m, const MotzkinWord& p, int j,
                         bool star_first) {
    if (j < 1 || j > m.size() + 1)
        throw IndexOutOfRangeError("j must lie in [1, " +
                                   std::to_string(m.size() + 1) + "]");
    const Letters mm = letters_of(m);
    const Letters pp = letters_of(p);
    Letters w(mm.begin(), mm.begin() + (j - 1));
    if (star_first) w.insert(w.end(), {StarLetter::Star, StarLetter::Up});
    else w.insert(w.end(), {StarLetter::Up, StarLetter::Star});
    w.insert(w.end(), pp.begin(), pp.end());
    w.push_back(StarLetter::Down);
    w.insert(w.end(), mm.begin() + (j - 1), mm.end());

    const std::size_t star1 = require_pos(kth_pos(w, is_star, 1), "star");
    const int x1 = count_if_before(w, star1, is_up);
    const int y1 = count_if_before(w, star1, is_down);

    std::size_t star2;
    if (star_first) {
        // type 4: second star goes after the (x1+1)-st down
        star2 = require_pos(kth_pos(w, is_down, x1 + 1), "anchor down") + 1;
    } else {
        // type 3: second star goes before the (x1+1)-st down (or at the end)
        star2 = index_before_kth(w, is_down, x1 + 1);
    }
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(star2), StarLetter::Star);
    const int x2 = count_if_before(w, star2, is_up);

    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_after_kth(w, is_up, y1)),
             StarLetter::Up);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(
                             index_before_kth(w, is_down, x2 + 1)),
             StarLetter::Down);
    return from_star_word(StarWord(std::move(w)));
}

// Shared core of the type-3/type-4 inverses: peel off the second star and
// the inserted up/down, then read the block u*Pd (or *uPd) out of the
// reduced word.
L4PairPreimage l4_pair_inverse(const StarContext& ctx, const StarWord& sw,
                               bool star_first) {
    const int y1 = ctx.stars[0].downs;
    const int x2 = ctx.stars[1].ups;
    Letters letters = sw.letters();
    erase_positions(
        letters,
        {require_pos(kth_pos(letters, is_down, x2), "inserted down"),
         static_cast<std::size_t>(ctx.stars[1].pos - 1),
         require_pos(kth_pos(letters, is_up, y1 + 1), "inserted up")});

    const std::size_t star = require_pos(kth_pos(letters, is_star, 1), "star");
    std::size_t block_begin, p_begin;
    if (star_first) {
        if (star + 1 >= letters.size() || !is_up(letters[star + 1]))
            throw DomainError("star is not followed by an up");
        block_begin = star;
        p_begin = star + 2;
    } else {
        if (star == 0 || !is_up(letters[star - 1]))
            throw DomainError("star is not preceded by an up");
        block_begin = star - 1;
        p_begin = star + 1;
    }
    const int len_p = max_motzkin_prefix_len(letters, p_begin);
    const std::size_t after_p = p_begin + static_cast<std::size_t>(len_p);
    if (after_p >= letters.size() || !is_down(letters[after_p]))
        throw DomainError("block is not closed by a down");

    L4PairPreimage pre;
    pre.p = motzkin_slice(letters, p_begin, after_p);
    pre.j = static_cast<int>(block_begin) + 1;
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(block_begin),
                  letters.begin() + static_cast<std::ptrdiff_t>(after_p) + 1);
    pre.m = motzkin_slice(letters, 0, letters.size());
    return pre;
}

} // namespace

DyckWord l4_type3_forward(const MotzkinWord& m, const MotzkinWord& p, int j) {
    return l4_pair_forward(m, p, j, /*star_first=*/false);
}

L4PairPreimage l4_type3_inverse(const DyckWord& d) {
    const StarWord sw = to_star_word(d);
    const StarContext ctx = require_dhat_member(d, sw);
    const int x1 = ctx.stars[0].ups, y2 = ctx.stars[1].downs;
    if (!(x1 == y2 + 1 && x1 >= 2))
        throw DomainError("requires x1 = y2 + 1 >= 2");
    return l4_pair_inverse(ctx, sw, /*star_first=*/false);
}

DyckWord l4_type4_forward(const MotzkinWord& m, const MotzkinWord& p, int j) {
    return l4_pair_forward(m, p, j, /*star_first=*/true);
}

DyckWord l4_type4_singleton() { return DyckWord::parse("ududud"); }

L4Type4Preimage l4_type4_inverse(const DyckWord& d) {
    const StarWord sw = to_star_word(d);
    const StarContext ctx = require_dhat_member(d, sw);
    const int x1 = ctx.stars[0].ups, y2 = ctx.stars[1].downs;
    if (x1 != y2) throw DomainError("requires x1 = y2");
    L4Type4Preimage pre;
    if (sw.str() == "**") {
        pre.singleton = true;
        return pre;
    }
    L4PairPreimage inner = l4_pair_inverse(ctx, sw, /*star_first=*/true);
    pre.m = std::move(inner.m);
    pre.p = std::move(inner.p);
    pre.j = inner.j;
    return pre;
}

} // namespace dyckl
