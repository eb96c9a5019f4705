#include "doctest.h"

#include <set>

#include "dyckl/bijections.hpp"
#include "dyckl/oracle.hpp"

using namespace dyckl;

TEST_CASE("to_star_word on the worked examples") {
    CHECK(to_star_word(DyckWord::parse("uudduuduuudduuududdudduuuddddd"))
              .str() == "h*uduuduh*ddhh");
    CHECK(to_star_word(DyckWord::parse("uuuuudduudddduuduudddd")).str() ==
          "huhhdu*hdh");
    CHECK(to_star_word(DyckWord::parse("ud")).size() == 0);
    CHECK_THROWS_AS(to_star_word(DyckWord()), DomainError);
}

TEST_CASE("from_star_word on the worked examples") {
    const DyckWord d = from_star_word(StarWord::parse("h*uduuduh*ddhh"));
    const AscDesc ad = asc_desc(d);
    CHECK(ad.asc == std::vector<int>{2, 4, 7, 10, 11, 12, 15});
    CHECK(ad.des == std::vector<int>{2, 3, 5, 6, 8, 10, 15});

    CHECK(from_star_word(StarWord::parse("hhhh")).str() == "uuuuuddddd");

    const RSArray rs = rs_array(from_star_word(StarWord::parse("udud")));
    REQUIRE(rs.width() == 4);
    CHECK(rs.cols == std::vector<std::pair<int, int>>{
                         {0, 2}, {1, 0}, {0, 1}, {2, 0}});

    CHECK(from_star_word(StarWord()).str() == "ud");
}

TEST_CASE("star-word correspondence is a bijection") {
    for (int n = 1; n <= 8; ++n) {
        long long count = 0;
        for_each_dyck(n, [&](const DyckWord& d) {
            CHECK(from_star_word(to_star_word(d)) == d);
            ++count;
        });
        CHECK(Int(count) == catalan_number(n));
    }
}

TEST_CASE("L factors through the star columns") {
    for (int n = 1; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            const RSArray rs = rs_array(d);
            Int product = 1;
            for (const auto& star : star_context(to_star_word(d)).stars) {
                const auto& [r, s] = rs.cols[star.pos - 1];
                product *= binomial(r + s, r);
            }
            CHECK(product == l_statistic(d));
        });
}

TEST_CASE("split_ballot and join_ballot") {
    const MotzkinWord p = MotzkinWord::parse("uhuhhdhhdudud");
    const BallotPair pair = split_ballot(p, 3, 4);
    CHECK(pair.p_s.str() == "uhhdhh");
    CHECK(pair.p_r.str() == "uhdudud");
    CHECK(join_ballot(pair) == p);

    // Degenerate all-horizontal split.
    const BallotPair flat = split_ballot(MotzkinWord::parse("hhhhh"), 2, 5);
    CHECK(flat.p_r.str() == "h");
    CHECK(flat.p_s.str() == "hhhh");
    CHECK(join_ballot(flat).str() == "hhhhh");

    CHECK_THROWS_AS(split_ballot(p, 2, 4), BallotPreconditionError);
    CHECK_THROWS_AS(split_ballot(MotzkinWord::parse("hh"), 2, 4),
                    BallotPreconditionError);

    for (int k = 2; k <= 5; ++k)
        for (int len = k - 1; len <= 9; ++len)
            for (const MotzkinWord& member : enum_ballot(len, k))
                for (int r = 1; r <= k; ++r)
                    CHECK(join_ballot(split_ballot(member, r, k + 1 - r)) ==
                          member);

    // The larger class T_{13,6}, every admissible (r,s).
    for (const MotzkinWord& member : enum_ballot(13, 6))
        for (int r = 1; r <= 6; ++r)
            CHECK(join_ballot(split_ballot(member, r, 7 - r)) == member);
}

TEST_CASE("two-return construction") {
    const DyckWord d =
        rs_two_returns_forward(MotzkinWord::parse("uhuhhdhhdudud"), 3, 4);
    CHECK(to_star_word(d).str() == "ududuhd*uhhdhh");
    CHECK(d.str() == "uuduudduuudduddduuuuduuudddddd");
    CHECK(returns(d) == 2);

    const auto pre = rs_two_returns_inverse(d);
    CHECK(pre.p.str() == "uhuhhdhhdudud");
    CHECK(pre.r == 3);
    CHECK(pre.s == 4);

    // Minimal case: r = s = 1 forces M* = "*" and D = udud.
    CHECK(rs_two_returns_forward(MotzkinWord(), 1, 1).str() == "udud");

    CHECK_THROWS_AS(rs_two_returns_inverse(DyckWord::parse("uudd")),
                    DomainError);
    // One-return member rejected by the two-return inverse.
    CHECK_THROWS_AS(rs_two_returns_inverse(DyckWord::parse("uuduuddudd")),
                    DomainError);
}

TEST_CASE("one-return construction") {
    const MotzkinWord m = MotzkinWord::parse("uudhudd");
    const MotzkinWord p = MotzkinWord::parse("uhuhhdhhdudud");
    const DyckWord d1 = rs_one_return_forward(m, p, 1, 3, 4);
    CHECK(to_star_word(d1).str() == "ududuhdu*uuduhhdhhdhudd");
    const DyckWord d8 = rs_one_return_forward(m, p, 8, 3, 4);
    CHECK(to_star_word(d8).str() == "uudhuududuhdudd*duhhdhh");

    for (int j = 1; j <= 8; ++j) {
        const DyckWord d = rs_one_return_forward(m, p, j, 3, 4);
        CHECK(returns(d) == 1);
        const auto pre = rs_one_return_inverse(d);
        CHECK(pre.m == m);
        CHECK(pre.p == p);
        CHECK(pre.j == j);
        CHECK(pre.r == 3);
        CHECK(pre.s == 4);
    }

    CHECK_THROWS_AS(rs_one_return_forward(m, p, 0, 3, 4),
                    IndexOutOfRangeError);
    CHECK_THROWS_AS(rs_one_return_forward(m, p, 9, 3, 4),
                    IndexOutOfRangeError);
    CHECK_THROWS_AS(rs_one_return_forward(m, MotzkinWord::parse("ud"), 1, 3, 4),
                    BallotPreconditionError);
    // Two-return member rejected by the one-return inverse.
    CHECK_THROWS_AS(rs_one_return_inverse(DyckWord::parse("udud")),
                    DomainError);
}

TEST_CASE("single-star paths have at most two returns") {
    for (int n = 2; n <= 9; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            if (to_star_word(d).star_count() == 1) {
                const int h = returns(d);
                CHECK(h >= 1);
                CHECK(h <= 2);
            }
        });
}

TEST_CASE("dm_check") {
    CHECK(dm_check(StarWord::parse("uh*uudd*hd")));
    CHECK(dm_check(StarWord::parse("**")));
    CHECK_FALSE(dm_check(StarWord::parse("*h*")));
    CHECK_THROWS_AS(dm_check(StarWord::parse("huhd")), WrongStarCountError);
    CHECK_THROWS_AS(dm_check(StarWord::parse("*uhd")), WrongStarCountError);

    // Equivalent characterisation: L = 4 with both star columns (1,1).
    for (int n = 3; n <= 9; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            const StarWord w = to_star_word(d);
            if (w.star_count() != 2) return;
            const RSArray rs = rs_array(d);
            bool both_ones = true;
            for (const auto& star : star_context(w).stars) {
                const auto& col = rs.cols[star.pos - 1];
                if (col.first != 1 || col.second != 1) both_ones = false;
            }
            CHECK(dm_check(w) == both_ones);
            CHECK(both_ones == (l_statistic(d) == 4));
        });
}

TEST_CASE("L4 type 1") {
    const MotzkinWord m = MotzkinWord::parse("hudh");
    const DyckWord a = l4_type1_forward(m, 2, 5);
    CHECK(to_star_word(a).str() == "uh*uudd*hd");
    const DyckWord b = l4_type1_forward(m, 2, 4);
    CHECK(to_star_word(b).str() == "uuh*u*ddhd");

    const auto pre_a = l4_type1_inverse(a);
    CHECK(pre_a.m == m);
    CHECK(pre_a.j1 == 2);
    CHECK(pre_a.j2 == 5);

    CHECK_THROWS_AS(l4_type1_forward(m, 3, 3), IndexOutOfRangeError);
    CHECK_THROWS_AS(l4_type1_forward(m, 0, 2), IndexOutOfRangeError);
    CHECK_THROWS_AS(l4_type1_forward(m, 2, 7), IndexOutOfRangeError);
    // x1 = y2 member belongs to type 4, not type 1.
    CHECK_THROWS_AS(l4_type1_inverse(l4_type4_singleton()), DomainError);
}

TEST_CASE("L4 type 2") {
    const DyckWord d = l4_type2_forward(MotzkinWord::parse("huudhd"));
    CHECK(to_star_word(d).str() == "u*huu*dhdd");
    CHECK(l4_type2_inverse(d) == MotzkinWord::parse("huudhd"));

    const DyckWord d0 = l4_type2_forward(MotzkinWord());
    CHECK(to_star_word(d0).str() == "u**d");
    CHECK(l_statistic(d0) == 4);
    CHECK(l4_type2_inverse(d0) == MotzkinWord());
}

TEST_CASE("L4 types 3 and 4") {
    const MotzkinWord m = MotzkinWord::parse("ud");
    const MotzkinWord p = MotzkinWord::parse("hh");

    const DyckWord d3 = l4_type3_forward(m, p, 1);
    CHECK(to_star_word(d3).str() == "uu*hhdu*dd");
    const auto pre3 = l4_type3_inverse(d3);
    CHECK(pre3.m == m);
    CHECK(pre3.p == p);
    CHECK(pre3.j == 1);

    const DyckWord d4 = l4_type4_forward(m, p, 1);
    CHECK(to_star_word(d4).str() == "u*uhhd*udd");
    const auto pre4 = l4_type4_inverse(d4);
    CHECK_FALSE(pre4.singleton);
    CHECK(pre4.m == m);
    CHECK(pre4.p == p);
    CHECK(pre4.j == 1);

    // Empty M: the insertion point is forced.
    const DyckWord forced = l4_type3_forward(MotzkinWord(), p, 1);
    CHECK(l_statistic(forced) == 4);
    CHECK(l4_type3_inverse(forced).p == p);

    CHECK(to_star_word(l4_type4_singleton()).str() == "**");
    CHECK(l4_type4_inverse(l4_type4_singleton()).singleton);
    CHECK_THROWS_AS(l4_type3_forward(m, p, 4), IndexOutOfRangeError);
    CHECK_THROWS_AS(l4_type4_inverse(d3), DomainError);
    CHECK_THROWS_AS(l4_type3_inverse(d4), DomainError);
}
