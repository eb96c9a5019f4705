#include "doctest.h"

#include <set>

#include "dyckl/oracle.hpp"
#include "dyckl/words.hpp"

using namespace dyckl;

namespace {

// Independent r-s oracle: count letters between consecutive runs directly
// from the step sequence instead of going through the ascent/descent
// sequences.
RSArray rs_by_direct_scan(const DyckWord& d) {
    const auto& steps = d.steps();
    std::vector<int> up_pos, down_pos;
    for (int i = 0; i < d.size(); ++i)
        (steps[i] == DyckStep::Up ? up_pos : down_pos).push_back(i);
    const int n = d.semilength();
    RSArray rs;
    if (n == 0) return rs;
    rs.cols.assign(n - 1, {0, 0});
    for (int k = 0; k + 1 < n; ++k) {
        int r = 0;
        for (int i = up_pos[k] + 1; i < up_pos[k + 1]; ++i)
            if (steps[i] == DyckStep::Down) ++r;
        int s = 0;
        for (int i = down_pos[k] + 1; i < down_pos[k + 1]; ++i)
            if (steps[i] == DyckStep::Up) ++s;
        rs.cols[k] = {r, s};
    }
    return rs;
}

DyckWord alternating(int n) {
    std::string text;
    for (int i = 0; i < n; ++i) text += "ud";
    return DyckWord::parse(text);
}

DyckWord pyramid(int n) {
    return DyckWord::parse(std::string(n, 'u') + std::string(n, 'd'));
}

} // namespace

TEST_CASE("parse_word accepts the documented examples") {
    CHECK(DyckWord::parse("uudd").steps() ==
          std::vector<DyckStep>{DyckStep::Up, DyckStep::Up, DyckStep::Down,
                                DyckStep::Down});
    CHECK(StarWord::parse("h*uduuduh*ddhh").size() == 14);
    CHECK(std::get<MotzkinWord>(parse_word("uhd", Alphabet::Motzkin)).str() ==
          "uhd");
    CHECK(std::get<CatalanWord>(parse_word("xyz", Alphabet::Catalan)).str() ==
          "xyz");
}

TEST_CASE("parse_word rejects invalid input") {
    CHECK_THROWS_AS(DyckWord::parse("udu"), UnbalancedWordError);
    CHECK_THROWS_AS(DyckWord::parse("duud"), PrefixViolationError);
    CHECK_THROWS_AS(DyckWord::parse("uxdd"), InvalidCharacterError);
    CHECK_THROWS_AS(DyckWord::parse("uhdd"), InvalidCharacterError);
    CHECK_THROWS_AS(MotzkinWord::parse("uh"), UnbalancedWordError);
    CHECK_THROWS_AS(StarWord::parse("*d*"), PrefixViolationError);
    CHECK_THROWS_AS(CatalanWord::parse("xzy"), PrefixViolationError);
    CHECK_THROWS_AS(CatalanWord::parse("xyzx"), UnbalancedWordError);
    CHECK_THROWS_AS(CatalanWord::parse("xy*"), InvalidCharacterError);
}

TEST_CASE("render is the inverse of parse on enumerated words") {
    for (int n = 0; n <= 6; ++n)
        for (const DyckWord& d : enum_dyck(n))
            CHECK(DyckWord::parse(d.str()) == d);
    for (int len = 0; len <= 6; ++len)
        for (const MotzkinWord& m : enum_motzkin(len))
            CHECK(MotzkinWord::parse(m.str()) == m);
    const StarWord w = StarWord::parse("h*uduuduh*ddhh");
    CHECK(StarWord::parse(w.str()) == w);
    for (int n = 0; n <= 3; ++n)
        for (const CatalanWord& c : enum_catalan_words(n))
            CHECK(CatalanWord::parse(c.str()) == c);
    CHECK(render(parse_word("uudd", Alphabet::Dyck)) == "uudd");
}

TEST_CASE("ascent and descent sequences") {
    const AscDesc ad = asc_desc(DyckWord::parse("uudduuduuudduuududdudduuuddddd"));
    CHECK(ad.asc == std::vector<int>{2, 4, 7, 10, 11, 12, 15});
    CHECK(ad.des == std::vector<int>{2, 3, 5, 6, 8, 10, 15});

    const AscDesc ad5 = asc_desc(pyramid(5));
    CHECK(ad5.asc == std::vector<int>{5});
    CHECK(ad5.des == std::vector<int>{5});

    const AscDesc alt = asc_desc(alternating(4));
    CHECK(alt.asc == std::vector<int>{1, 2, 3, 4});
    CHECK(alt.des == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("asc_desc properties hold exhaustively") {
    for (int n = 1; n <= 8; ++n) {
        for_each_dyck(n, [&](const DyckWord& d) {
            const AscDesc ad = asc_desc(d);
            REQUIRE(ad.asc.size() == ad.des.size());
            CHECK(ad.asc.back() == n);
            CHECK(ad.des.back() == n);
            for (std::size_t i = 0; i < ad.asc.size(); ++i) {
                CHECK(ad.asc[i] >= ad.des[i]);
                CHECK(ad.des[i] > 0);
                if (i > 0) {
                    CHECK(ad.asc[i] > ad.asc[i - 1]);
                    CHECK(ad.des[i] > ad.des[i - 1]);
                }
            }
            CHECK(dyck_from_asc_desc(ad) == d);
        });
    }
}

TEST_CASE("r-s array matches the worked examples") {
    const RSArray rs = rs_array(DyckWord::parse("uudduuduuudduuududdudduuuddddd"));
    const std::vector<int> r = {0, 2, 0, 1, 0, 0, 2, 0, 0, 1, 2, 2, 0, 0};
    const std::vector<int> s = {0, 2, 3, 0, 3, 1, 0, 1, 0, 3, 0, 0, 0, 0};
    REQUIRE(rs.width() == 14);
    for (int i = 0; i < 14; ++i) {
        CHECK(rs.cols[i].first == r[i]);
        CHECK(rs.cols[i].second == s[i]);
    }

    const RSArray rs2 = rs_array(DyckWord::parse("uuuuudduudddduuduudddd"));
    REQUIRE(rs2.width() == 10);
    CHECK(rs2.cols[6] == std::pair<int, int>{4, 2});
    CHECK(l_statistic(DyckWord::parse("uuuuudduudddduuduudddd")) == 15);

    for (const auto& col : rs_array(pyramid(6)).cols)
        CHECK(col == std::pair<int, int>{0, 0});
}

TEST_CASE("r-s array agrees with the direct between-runs scan") {
    for (int n = 1; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            CHECK(rs_array(d) == rs_by_direct_scan(d));
        });
}

TEST_CASE("ascent/descent sequences reconstruct from the r-s array") {
    // Nonzero r_k sit exactly at the ascent positions below n, nonzero s_k
    // at the descent positions, and the entries are the run increments.
    for (int n = 1; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            const RSArray rs = rs_array(d);
            AscDesc rebuilt;
            for (int k = 1; k < n; ++k)
                if (rs.cols[k - 1].first > 0) rebuilt.asc.push_back(k);
            for (int k = 1; k < n; ++k)
                if (rs.cols[k - 1].second > 0) rebuilt.des.push_back(k);
            rebuilt.asc.push_back(n);
            rebuilt.des.push_back(n);
            const AscDesc ad = asc_desc(d);
            CHECK(rebuilt == ad);
            for (std::size_t i = 0; i + 1 < ad.asc.size(); ++i) {
                const auto& col_a = rs.cols[ad.asc[i] - 1];
                CHECK(col_a.first ==
                      ad.des[i] - (i > 0 ? ad.des[i - 1] : 0));
                const auto& col_b = rs.cols[ad.des[i] - 1];
                CHECK(col_b.second == ad.asc[i + 1] - ad.asc[i]);
            }
        });
}

TEST_CASE("L statistic values") {
    CHECK(l_statistic(DyckWord::parse("uudduuduuudduuududdudduuuddddd")) == 24);
    CHECK(l_statistic(DyckWord::parse("ududud")) == 4);
    CHECK(l_statistic(DyckWord::parse("uuddud")) == 3);
    CHECK(l_statistic(DyckWord()) == 1);
}

TEST_CASE("L = 1 exactly when every column has a zero") {
    for (int n = 1; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            bool zero_everywhere = true;
            for (const auto& [r, s] : rs_array(d).cols)
                if (r > 0 && s > 0) zero_everywhere = false;
            CHECK((l_statistic(d) == 1) == zero_everywhere);
        });
}

TEST_CASE("L is invariant under reverse-complement") {
    for (int n = 1; n <= 10; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            CHECK(l_statistic(reverse_complement(d)) == l_statistic(d));
        });
}

TEST_CASE("returns") {
    CHECK(returns(pyramid(7)) == 1);
    CHECK(returns(alternating(6)) == 6);
    // Height scan of the running example: the path touches the axis after
    // steps 4 and 30 only.
    CHECK(returns(DyckWord::parse("uudduuduuudduuududdudduuuddddd")) == 2);

    for (int n = 1; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckWord& d) {
            // A return closes a balanced prefix; recount them via parsing.
            int expected = 0;
            for (int k = 1; k <= n; ++k) {
                const std::string prefix = d.str().substr(0, 2 * k);
                int height = 0;
                bool valid = true;
                for (char c : prefix) {
                    height += c == 'u' ? 1 : -1;
                    if (height < 0) valid = false;
                }
                if (valid && height == 0 && prefix.back() == 'd') ++expected;
            }
            CHECK(returns(d) == expected);
            CHECK(returns(d) >= 1);
            CHECK((returns(d) == n) == (d == alternating(n)));
        });
}

TEST_CASE("reverse_motzkin") {
    CHECK(reverse_motzkin(MotzkinWord::parse("huuhdhd")).str() == "uhuhddh");
    CHECK(reverse_motzkin(MotzkinWord::parse("hhhh")).str() == "hhhh");
    const MotzkinWord m = MotzkinWord::parse("uhdudud");
    CHECK(reverse_motzkin(reverse_motzkin(m)) == m);
}

TEST_CASE("star_context") {
    const StarContext two = star_context(StarWord::parse("uh*uudd*hd"));
    REQUIRE(two.stars.size() == 2);
    CHECK(two.stars[0] == StarContext::Entry{3, 1, 0});
    CHECK(two.stars[1] == StarContext::Entry{8, 3, 2});

    const StarContext one = star_context(StarWord::parse("huhhdu*hdh"));
    REQUIRE(one.stars.size() == 1);
    CHECK(one.stars[0] == StarContext::Entry{7, 2, 1});

    CHECK(star_context(StarWord::parse("hhhh")).stars.empty());
}

TEST_CASE("first_down_pos") {
    CHECK(first_down_pos(MotzkinWord::parse("uhd")) == 3);
    CHECK(first_down_pos(MotzkinWord::parse("hh")) == 0);
    CHECK(first_down_pos(MotzkinWord()) == 0);
}

TEST_CASE("empty Dyck word is accepted and excluded from star conversion") {
    const DyckWord empty;
    CHECK(empty.semilength() == 0);
    CHECK(l_statistic(empty) == 1);
    CHECK(rs_array(empty).width() == 0);
}
