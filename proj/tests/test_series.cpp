#include "doctest.h"

#include "dyckl/counting.hpp"
#include "dyckl/oracle.hpp"
#include "dyckl/series.hpp"

using namespace dyckl;

TEST_CASE("Motzkin numbers") {
    const std::vector<Int> m = motzkin_numbers(8);
    const std::vector<long long> want = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    REQUIRE(m.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(m[i] == want[i]);
    CHECK(motzkin_number(0) == 1);
    CHECK(motzkin_number(-3) == 0);

    for (int n = 0; n <= 10; ++n)
        CHECK(Int(enum_motzkin(n).size()) == motzkin_number(n));
}

TEST_CASE("Motzkin functional equation m = 1 + xm + x^2 m^2") {
    const TruncatedSeries m = motzkin_gf(20);
    const TruncatedSeries rhs =
        TruncatedSeries::constant(1, 20) + m.shift(1) + (m * m).shift(2);
    CHECK(m == rhs);
}

TEST_CASE("ballot numbers") {
    CHECK(ballot_number(3, 3) == 2); // uhd and hud
    CHECK(ballot_number(2, 3) == 1); // the convention member hh
    for (int n = 1; n <= 6; ++n) CHECK(ballot_number(n, 1) == 0);
    CHECK(ballot_number(0, 1) == 1);
    CHECK(ballot_number(-1, 2) == 0);
    CHECK(ballot_number(1, 5) == 0);

    // Exhaustive agreement with first-down filtering.
    for (int k = 1; k <= 7; ++k)
        for (int n = 0; n <= 10; ++n)
            CHECK(ballot_number(n, k) == Int(enum_ballot(n, k).size()));

    // T_{13,6} both ways.
    CHECK(ballot_number(13, 6) == Int(enum_ballot(13, 6).size()));
    CHECK(ballot_number(13, 6) == 5220);
}

TEST_CASE("ballot generating function") {
    const TruncatedSeries one = ballot_gf(1, 5);
    CHECK(one.coeff(0) == 1);
    for (int k = 1; k <= 5; ++k) CHECK(one.coeff(k) == 0);
    CHECK(ballot_gf(3, 4).coeff(3) == 2);
    CHECK(ballot_gf(6, 13).coeff(13) == 5220);
}

TEST_CASE("ballot row sums give Motzkin numbers") {
    for (int n = 0; n <= 12; ++n) {
        Int sum = 0;
        for (int k = 1; k <= n + 1; ++k) sum += ballot_number(n, k);
        CHECK(sum == motzkin_number(n));
    }
}

TEST_CASE("series arithmetic") {
    const TruncatedSeries xm = motzkin_gf(6).shift(1);
    const TruncatedSeries dxm = xm.derivative();
    for (int n = 0; n <= 5; ++n) CHECK(dxm.coeff(n) == (n + 1) * motzkin_number(n));

    const TruncatedSeries one = TruncatedSeries::constant(1, 6);
    CHECK(one * motzkin_gf(6) == motzkin_gf(6));

    const TruncatedSeries base =
        TruncatedSeries::constant(1, 10) + motzkin_gf(10).shift(1);
    CHECK(base.pow(2) == base * base);
    CHECK(base.pow(5) == base * base * base * base * base);
    CHECK(base.pow(0) == TruncatedSeries::constant(1, 10));

    // Orders: binary ops truncate to the smaller order.
    CHECK((TruncatedSeries::constant(1, 3) + TruncatedSeries::constant(1, 7))
              .order() == 3);
    CHECK(motzkin_gf(9).derivative().order() == 8);
    CHECK(motzkin_gf(9).shift(4).order() == 9);
}

TEST_CASE("gf_L2") {
    const TruncatedSeries g = gf_L2(10);
    const std::vector<long long> want = {1, 0, 1, 2, 6, 16, 45, 126, 357};
    for (int n = 2; n <= 10; ++n) CHECK(g.coeff(n) == want[n - 2]);
    CHECK(g.coeff(2) == 1);
    CHECK(g.coeff(3) == 0);
    CHECK(g.coeff(0) == 0);
}

TEST_CASE("gf_Lp") {
    const TruncatedSeries g3 = gf_Lp(3, 10);
    const std::vector<long long> row3 = {2, 2, 4, 10, 26, 70, 192, 534};
    for (int n = 3; n <= 10; ++n) CHECK(g3.coeff(n) == row3[n - 3]);

    const TruncatedSeries g5 = gf_Lp(5, 12);
    const std::vector<long long> row5 = {2, 6, 14, 36, 96, 262, 726, 2034};
    for (int n = 5; n <= 12; ++n) CHECK(g5.coeff(n) == row5[n - 5]);

    const TruncatedSeries g7 = gf_Lp(7, 14);
    const std::vector<long long> row7 = {2, 10, 32, 94, 272, 784, 2260, 6524};
    for (int n = 7; n <= 14; ++n) CHECK(g7.coeff(n) == row7[n - 7]);

    CHECK_THROWS_AS(gf_Lp(2, 5), NotPrimeError);
    CHECK_THROWS_AS(gf_Lp(9, 5), NotPrimeError);
    CHECK_THROWS_AS(gf_Lp(1, 5), NotPrimeError);
}

TEST_CASE("gf_rs") {
    CHECK(gf_rs(1, 3, 15) == gf_rs(2, 2, 15));
    CHECK(gf_rs(1, 2, 15) * Int(2) == gf_Lp(3, 15));
    const TruncatedSeries g11 = gf_rs(1, 1, 15);
    for (int n = 4; n <= 15; ++n)
        CHECK(g11.coeff(n) == (n - 3) * motzkin_number(n - 4));
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_NOTHROW(require_odd_prime(11));
    CHECK_THROWS_AS(require_odd_prime(2), NotPrimeError);
}
