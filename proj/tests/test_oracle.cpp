#include "doctest.h"

#include <set>

#include "dyckl/bijections.hpp"
#include "dyckl/oracle.hpp"
#include "dyckl/series.hpp"

using namespace dyckl;

TEST_CASE("enum_dyck order and cardinality") {
    const auto d2 = enum_dyck(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].str() == "uudd");
    CHECK(d2[1].str() == "udud");

    const auto d3 = enum_dyck(3);
    const std::vector<std::string> want = {"uuuddd", "uududd", "uuddud",
                                           "uduudd", "ududud"};
    REQUIRE(d3.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(d3[i].str() == want[i]);

    for (int n = 0; n <= 10; ++n)
        CHECK(Int(enum_dyck(n).size()) == catalan_number(n));

    long long count = 0;
    for_each_dyck(12, [&](const DyckWord&) { ++count; });
    CHECK(count == 208012);
}

TEST_CASE("oracle bounds are enforced") {
    OracleLimits tight{6, 3, 6};
    CHECK_THROWS_AS(enum_dyck(7, tight), OracleBoundError);
    CHECK_THROWS_AS(l_histogram(7, 1, tight), OracleBoundError);
    CHECK_THROWS_AS(enum_catalan_words(4, tight), OracleBoundError);
    CHECK_THROWS_AS(enum_321_3cycle(9, tight), OracleBoundError);
    CHECK_NOTHROW(enum_dyck(6, tight));
}

TEST_CASE("l_histogram") {
    const auto h3 = l_histogram(3);
    REQUIRE(h3.size() == 3);
    CHECK(h3.at(1) == 2);
    CHECK(h3.at(3) == 2);
    CHECK(h3.at(4) == 1);

    CHECK(l_histogram(5).at(1) == 9);
    CHECK(l_histogram(6).at(2) == 6);

    for (int n = 1; n <= 8; ++n) {
        Int total = 0;
        for (const auto& [l, c] : l_histogram(n)) total += c;
        CHECK(total == catalan_number(n));
    }
}

TEST_CASE("l_histogram is identical across worker counts") {
    const auto reference = l_histogram(9, 1);
    for (int workers : {2, 3, 5, 8})
        CHECK(l_histogram(9, workers) == reference);
}

TEST_CASE("l_returns_histogram") {
    // D_3: (L, h) pairs are (1,1) x2, (3,2) x2, (4,3) x1.
    const auto h = l_returns_histogram(3);
    CHECK(h.at({Int(1), 1}) == 2);
    CHECK(h.at({Int(3), 2}) == 2);
    CHECK(h.at({Int(4), 3}) == 1);
}

TEST_CASE("enum_catalan_words") {
    const auto c1 = enum_catalan_words(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].str() == "xyz");

    const auto c2 = enum_catalan_words(2);
    const std::vector<std::string> want = {"xxyyzz", "xxyzyz", "xyxyzz",
                                           "xyxzyz", "xyzxyz"};
    REQUIRE(c2.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(c2[i].str() == want[i]);

    // Words with equal projections at n = 3.
    long long equal_projections = 0;
    for (const CatalanWord& c : enum_catalan_words(3))
        if (d_xy(c) == d_yz(c)) ++equal_projections;
    CHECK(equal_projections == 12);
}

TEST_CASE("projections") {
    const CatalanWord c = CatalanWord::parse("xxyxyzzxyyzz");
    CHECK(d_xy(c).str() == "uudududd");
    CHECK(d_yz(c).str() == "uudduudd");
}

TEST_CASE("words_matching") {
    const auto words = matching_words(DyckWord::parse("ududud"));
    CHECK(words.size() == 4);
    std::set<std::string> got;
    for (const auto& w : words) got.insert(w.str());
    CHECK(got.count("xyzxyzxyz") == 1);

    CHECK(words_matching(DyckWord::parse("uuuddd")) == 1);
    CHECK(matching_words(DyckWord::parse("uuuddd"))[0].str() == "xxxyyyzzz");
    CHECK(words_matching(DyckWord::parse("uuddud")) == 3);
}

TEST_CASE("enum_321_3cycle") {
    CHECK(enum_321_3cycle(3) == 2);
    CHECK(enum_321_3cycle(6) == 10);
    CHECK(enum_321_3cycle(9) == 60);
    CHECK_THROWS_AS(enum_321_3cycle(4), Error);
    CHECK_THROWS_AS(enum_321_3cycle(0), Error);
}

TEST_CASE("filter_by_star_signature") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(filter_by_star_signature(n, {}) ==
              motzkin_number(n - 1)); // L = 1 class
    }
    const std::vector<long long> mixed = {2, 4, 8, 16, 44};
    for (int n = 4; n <= 8; ++n)
        CHECK(filter_by_star_signature(n, {Int(2), Int(3)}) == mixed[n - 4]);

    // {2,2} signatures are exactly the two-star L = 4 class.
    for (int n = 3; n <= 9; ++n) {
        Int brute = 0;
        for_each_dyck(n, [&](const DyckWord& d) {
            if (l_statistic(d) == 4 &&
                to_star_word(d).star_count() == 2)
                ++brute;
        });
        CHECK(filter_by_star_signature(n, {Int(2), Int(2)}) == brute);
    }
}

TEST_CASE("enum_ballot includes the all-horizontal convention member") {
    const auto t23 = enum_ballot(2, 3);
    REQUIRE(t23.size() == 1);
    CHECK(t23[0].str() == "hh");
    const auto t33 = enum_ballot(3, 3);
    std::set<std::string> got;
    for (const auto& m : t33) got.insert(m.str());
    CHECK(got == std::set<std::string>{"uhd", "hud"});
    CHECK(enum_ballot(4, 1).empty());
}
