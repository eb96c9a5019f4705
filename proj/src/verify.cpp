#include "dyckl/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dyckl/bijections.hpp"
#include "dyckl/counting.hpp"
#include "dyckl/series.hpp"

namespace dyckl::verify {

namespace {

using Results = std::vector<CheckResult>;

void add(Results& out, const std::string& name, bool pass,
         const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

void append(Results& out, Results more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
}

} // namespace

// -------------------------------------------------------------------------
// Figure goldens
// -------------------------------------------------------------------------

std::vector<CheckResult> check_fig_catwords(const OracleLimits& limits) {
    struct Row {
        const char* dyck;
        int l;
        std::vector<const char*> words;
    };
    static const std::vector<Row> rows = {
        {"uuuddd", 1, {"xxxyyyzzz"}},
        {"uududd", 1, {"xxyxyzyzz"}},
        {"uuddud", 3, {"xxyyzzxyz", "xxyyzxzyz", "xxyyxzzyz"}},
        {"uduudd", 3, {"xyzxxyyzz", "xyxzxyyzz", "xyxxzyyzz"}},
        {"ududud", 4, {"xyzxyzxyz", "xyzxyxzyz", "xyxzyzxyz", "xyxzyxzyz"}},
    };

    Results out;
    const std::vector<DyckWord> d3 = enum_dyck(3, limits);
    bool order_ok = d3.size() == rows.size();
    for (std::size_t i = 0; order_ok && i < rows.size(); ++i)
        order_ok = d3[i].str() == rows[i].dyck;
    add(out, "catwords/enumeration order at n=3", order_ok);

    Int total = 0;
    for (const Row& row : rows) {
        const DyckWord d = DyckWord::parse(row.dyck);
        add(out, std::string("catwords/L(") + row.dyck + ")",
            l_statistic(d) == row.l);
        std::set<std::string> got;
        for (const CatalanWord& c : matching_words(d, limits))
            got.insert(c.str());
        std::set<std::string> want(row.words.begin(), row.words.end());
        add(out, std::string("catwords/matches(") + row.dyck + ")",
            got == want, "matched word set differs");
        total += Int(got.size());
    }
    add(out, "catwords/total equals C(9,3)/7 = 12", total == 12,
        "total " + total.str());
    return out;
}

std::vector<CheckResult> check_count_table() {
    struct Row {
        int k;
        int n0;
        std::vector<long long> values;
    };
    static const std::vector<Row> rows = {
        {1, 1, {1, 1, 2, 4, 9, 21, 51, 127, 323}},
        {2, 2, {1, 0, 1, 2, 6, 16, 45, 126, 357}},
        {3, 3, {2, 2, 4, 10, 26, 70, 192, 534}},
        {4, 4, {2, 5, 9, 25, 65, 181, 505, 1434}},
        {5, 5, {2, 6, 14, 36, 96, 262, 726, 2034}},
        {7, 7, {2, 10, 32, 94, 272, 784, 2260, 6524}},
    };

    Results out;
    for (const Row& row : rows) {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            const int n = row.n0 + static_cast<int>(i);
            Int got;
            switch (row.k) {
                case 1: got = count_L1(n); break;
                case 2: got = count_L2(n); break;
                case 4: got = count_L4(n); break;
                default: got = count_Lp(n, row.k); break;
            }
            if (got != row.values[i]) {
                ok = false;
                detail = "n=" + std::to_string(n) + ": got " + got.str() +
                         ", want " + std::to_string(row.values[i]);
                break;
            }
        }
        add(out, "table/L=" + std::to_string(row.k) + " sequence", ok, detail);
    }
    return out;
}

std::vector<CheckResult> check_fig_L1() {
    struct Row {
        const char* mstar;
        std::vector<int> r;
        std::vector<int> s;
    };
    static const std::vector<Row> rows = {
        {"hhhh", {0, 0, 0, 0}, {0, 0, 0, 0}},
        {"uhhd", {0, 0, 0, 1}, {1, 0, 0, 0}},
        {"huhd", {0, 0, 0, 2}, {0, 1, 0, 0}},
        {"hhud", {0, 0, 0, 3}, {0, 0, 1, 0}},
        {"uhdh", {0, 0, 1, 0}, {2, 0, 0, 0}},
        {"hudh", {0, 0, 2, 0}, {0, 2, 0, 0}},
        {"udhh", {0, 1, 0, 0}, {3, 0, 0, 0}},
        {"uudd", {0, 0, 1, 1}, {1, 1, 0, 0}},
        {"udud", {0, 1, 0, 2}, {2, 0, 1, 0}},
    };

    Results out;
    std::set<DyckWord> figure_paths;
    for (const Row& row : rows) {
        const StarWord w = StarWord::parse(row.mstar);
        const DyckWord d = from_star_word(w);
        figure_paths.insert(d);
        const RSArray rs = rs_array(d);
        bool rs_ok = rs.width() == 4;
        for (int i = 0; rs_ok && i < 4; ++i)
            rs_ok = rs.cols[i].first == row.r[i] && rs.cols[i].second == row.s[i];
        add(out, std::string("figL1/") + row.mstar + " r-s array", rs_ok);
        add(out, std::string("figL1/") + row.mstar + " L=1",
            l_statistic(d) == 1);
        add(out, std::string("figL1/") + row.mstar + " star roundtrip",
            to_star_word(d) == w);
    }

    std::set<DyckWord> brute;
    for_each_dyck(5, [&](const DyckWord& d) {
        if (l_statistic(d) == 1) brute.insert(d);
    });
    add(out, "figL1/nine rows are exactly D_5^1", figure_paths == brute);
    return out;
}

std::vector<CheckResult> check_fig_L2() {
    struct Row {
        const char* m;
        int j;
        const char* mstar;
        std::vector<int> asc, des, r, s;
    };
    static const std::vector<Row> rows = {
        {"hh", 1, "u*hhd", {2, 5, 6}, {1, 2, 6},
         {0, 1, 0, 0, 1}, {3, 1, 0, 0, 0}},
        {"hh", 2, "uh*hd", {3, 5, 6}, {1, 3, 6},
         {0, 0, 1, 0, 2}, {2, 0, 1, 0, 0}},
        {"hh", 3, "uhh*d", {4, 5, 6}, {1, 4, 6},
         {0, 0, 0, 1, 3}, {1, 0, 0, 1, 0}},
        {"ud", 1, "u*udd", {2, 4, 5, 6}, {1, 2, 3, 6},
         {0, 1, 0, 1, 1}, {2, 1, 1, 0, 0}},
        {"ud", 2, "uu*dd", {3, 4, 5, 6}, {1, 2, 3, 6},
         {0, 0, 1, 1, 1}, {1, 1, 1, 0, 0}},
        {"ud", 3, "uud*d", {3, 4, 5, 6}, {1, 2, 4, 6},
         {0, 0, 1, 1, 2}, {1, 1, 0, 1, 0}},
    };

    Results out;
    std::set<DyckWord> figure_paths;
    for (const Row& row : rows) {
        const std::string tag = std::string("figL2/") + row.mstar;
        const StarWord w = StarWord::parse(row.mstar);
        const DyckWord d = from_star_word(w);
        figure_paths.insert(d);
        const AscDesc ad = asc_desc(d);
        add(out, tag + " asc/des", ad.asc == row.asc && ad.des == row.des,
            "asc " + show(ad.asc) + " des " + show(ad.des));
        const RSArray rs = rs_array(d);
        bool rs_ok = rs.width() == 5;
        for (int i = 0; rs_ok && i < 5; ++i)
            rs_ok = rs.cols[i].first == row.r[i] && rs.cols[i].second == row.s[i];
        add(out, tag + " r-s array", rs_ok);
        add(out, tag + " L=2", l_statistic(d) == 2);
        add(out, tag + " star roundtrip", to_star_word(d) == w);
        // Each row is the one-return construction (r = s = 1) applied to
        // (M, empty P, j).
        const DyckWord rebuilt = rs_one_return_forward(
            MotzkinWord::parse(row.m), MotzkinWord(), row.j, 1, 1);
        add(out, tag + " one-return preimage", rebuilt == d);
    }

    std::set<DyckWord> brute;
    for_each_dyck(6, [&](const DyckWord& d) {
        if (l_statistic(d) == 2) brute.insert(d);
    });
    add(out, "figL2/six rows are exactly D_6^2", figure_paths == brute);
    return out;
}

std::vector<CheckResult> check_fig_one_return_table() {
    struct Row {
        int j;
        const char* mbar;
        int xbar, ybar;
        const char* mstar;
    };
    static const std::vector<Row> rows = {
        {1, "*uudhudd", 0, 0, "ududuhdu*uuduhhdhhdhudd"},
        {2, "u*udhudd", 1, 0, "ududuhduu*udhuduhhdhhdd"},
        {3, "uu*dhudd", 2, 0, "ududuhduuu*dhudduhhdhhd"},
        {4, "uud*hudd", 2, 1, "uududuhduud*hudduhhdhhd"},
        {5, "uudh*udd", 2, 1, "uududuhduudh*udduhhdhhd"},
        {6, "uudhu*dd", 3, 1, "uududuhduudhu*ddduhhdhh"},
        {7, "uudhud*d", 3, 2, "uuududuhdudhud*dduhhdhh"},
        {8, "uudhudd*", 3, 3, "uudhuududuhdudd*duhhdhh"},
    };

    Results out;
    const MotzkinWord m = MotzkinWord::parse("uudhudd");
    const MotzkinWord p = MotzkinWord::parse("uhuhhdhhdudud");
    for (const Row& row : rows) {
        const std::string tag = "one-return/j=" + std::to_string(row.j);
        // The intermediate word and its star context, as printed in the
        // reference table.
        StarWord mbar = [&] {
            auto letters = StarWord(m).letters();
            letters.insert(letters.begin() + (row.j - 1), StarLetter::Star);
            return StarWord(letters);
        }();
        const auto ctx = star_context(mbar);
        add(out, tag + " intermediate word", mbar.str() == row.mbar,
            "got " + mbar.str());
        add(out, tag + " star context",
            ctx.stars.size() == 1 && ctx.stars[0].ups == row.xbar &&
                ctx.stars[0].downs == row.ybar);

        const DyckWord d = rs_one_return_forward(m, p, row.j, 3, 4);
        add(out, tag + " result", to_star_word(d).str() == row.mstar,
            "got " + to_star_word(d).str());
        add(out, tag + " one return", returns(d) == 1);
        const auto pre = rs_one_return_inverse(d);
        add(out, tag + " inverse",
            pre.m == m && pre.p == p && pre.j == row.j && pre.r == 3 &&
                pre.s == 4);
    }
    return out;
}

// -------------------------------------------------------------------------
// Bijection suites
// -------------------------------------------------------------------------

namespace {

// D_n^{r,s} split by number of returns, brute-forced.
void brute_rs_class(int n, int r, int s, std::set<DyckWord>& two_ret,
                    std::set<DyckWord>& one_ret) {
    for_each_dyck(n, [&](const DyckWord& d) {
        const StarWord w = to_star_word(d);
        if (w.star_count() != 1) return;
        const auto ctx = star_context(w);
        const auto col = rs_array(d).cols[ctx.stars[0].pos - 1];
        if (col.first != r || col.second != s) return;
        (returns(d) == 2 ? two_ret : one_ret).insert(d);
    });
}

// Members of the two-star L = 4 class, brute-forced.
std::set<DyckWord> brute_dhat(int n) {
    std::set<DyckWord> dhat;
    for_each_dyck(n, [&](const DyckWord& d) {
        const StarWord w = to_star_word(d);
        if (w.star_count() == 2 && l_statistic(d) == 4) dhat.insert(d);
    });
    return dhat;
}

} // namespace

std::vector<CheckResult> check_bijections(int n_max_rs, int n_max_l4) {
    Results out;

    // Star-word correspondence, both directions.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= n_max_rs && ok; ++n) {
            long long count = 0;
            for_each_dyck(n, [&](const DyckWord& d) {
                if (ok && from_star_word(to_star_word(d)) != d) {
                    ok = false;
                    detail = d.str();
                }
                ++count;
            });
            if (ok && Int(count) != catalan_number(n)) {
                ok = false;
                detail = "cardinality at n=" + std::to_string(n);
            }
        }
        add(out, "bijections/star-word correspondence n<=" +
                     std::to_string(n_max_rs),
            ok, detail);
    }

    // Single-star families: the two-return and one-return constructions
    // tile D_n^{r,s}, with matching image sizes and two-sided roundtrips.
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= n_max_rs && ok; ++n) {
            for (int r = 1; r + 1 <= 5 && ok; ++r) {
                for (int s = 1; r + s <= 5 && ok; ++s) {
                    if (n < r + s) continue;
                    std::set<DyckWord> two_ret, one_ret;
                    brute_rs_class(n, r, s, two_ret, one_ret);
                    const auto fail = [&](const std::string& msg) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " r=" +
                                 std::to_string(r) + " s=" +
                                 std::to_string(s) + ": " + msg;
                    };

                    std::set<DyckWord> img;
                    for (const MotzkinWord& p : enum_ballot(n - 2, r + s - 1)) {
                        const DyckWord d = rs_two_returns_forward(p, r, s);
                        const auto pre = rs_two_returns_inverse(d);
                        if (pre.p != p || pre.r != r || pre.s != s) {
                            fail("two-return roundtrip");
                            break;
                        }
                        img.insert(d);
                    }
                    if (!ok) break;
                    if (img != two_ret) fail("two-return image");
                    if (ok && Int(img.size()) != ballot_number(n - 2, r + s - 1))
                        fail("two-return image size");
                    if (!ok) break;

                    img.clear();
                    Int expected_size = 0;
                    for (int i = 0; ok && i <= n - 2 - s - r; ++i) {
                        for (const MotzkinWord& m : enum_motzkin(i)) {
                            for (const MotzkinWord& p :
                                 enum_ballot(n - 4 - i, r + s - 1)) {
                                for (int j = 1; j <= i + 1; ++j) {
                                    const DyckWord d = rs_one_return_forward(
                                        m, p, j, r, s);
                                    const auto pre = rs_one_return_inverse(d);
                                    if (pre.m != m || pre.p != p ||
                                        pre.j != j || pre.r != r ||
                                        pre.s != s) {
                                        fail("one-return roundtrip");
                                        break;
                                    }
                                    img.insert(d);
                                }
                                if (!ok) break;
                            }
                            if (!ok) break;
                        }
                        expected_size += (i + 1) * motzkin_number(i) *
                                         ballot_number(n - 4 - i, r + s - 1);
                    }
                    if (!ok) break;
                    if (img != one_ret) fail("one-return image");
                    if (ok && Int(img.size()) != expected_size)
                        fail("one-return image size");
                    if (ok && Int(one_ret.size() + two_ret.size()) !=
                                  count_rs(n, r, s))
                        fail("count_rs vs brute force");
                }
            }
        }
        add(out, "bijections/single-star families n<=" +
                     std::to_string(n_max_rs) + ", r+s<=5",
            ok, detail);
    }

    // L = 4 families: roundtrips, image sizes, and the partition of the
    // two-star class.
    {
        bool ok = true;
        std::string detail;
        const auto fail = [&](int n, const std::string& msg) {
            ok = false;
            detail = "n=" + std::to_string(n) + ": " + msg;
        };
        for (int n = 3; n <= n_max_l4 && ok; ++n) {
            const std::set<DyckWord> dhat = brute_dhat(n);
            std::set<DyckWord> t1, t2, t3, t4;
            if (n >= 7) {
                for (const MotzkinWord& m : enum_motzkin(n - 7)) {
                    for (int j1 = 1; j1 <= n - 5 && ok; ++j1)
                        for (int j2 = j1 + 1; j2 <= n - 5 && ok; ++j2) {
                            const DyckWord d = l4_type1_forward(m, j1, j2);
                            const auto pre = l4_type1_inverse(d);
                            if (pre.m != m || pre.j1 != j1 || pre.j2 != j2)
                                fail(n, "type-1 roundtrip");
                            t1.insert(d);
                        }
                    if (!ok) break;
                }
            }
            if (ok && n >= 5) {
                for (const MotzkinWord& m : enum_motzkin(n - 5)) {
                    const DyckWord d = l4_type2_forward(m);
                    if (l4_type2_inverse(d) != m) {
                        fail(n, "type-2 roundtrip");
                        break;
                    }
                    t2.insert(d);
                }
            }
            if (ok && n >= 7) {
                for (int i = 0; i <= n - 7 && ok; ++i)
                    for (const MotzkinWord& m : enum_motzkin(i)) {
                        for (const MotzkinWord& p : enum_motzkin(n - 7 - i))
                            for (int j = 1; j <= i + 1; ++j) {
                                const DyckWord d3 = l4_type3_forward(m, p, j);
                                const auto p3 = l4_type3_inverse(d3);
                                if (p3.m != m || p3.p != p || p3.j != j) {
                                    fail(n, "type-3 roundtrip");
                                    break;
                                }
                                t3.insert(d3);
                                const DyckWord d4 = l4_type4_forward(m, p, j);
                                const auto p4 = l4_type4_inverse(d4);
                                if (p4.singleton || p4.m != m || p4.p != p ||
                                    p4.j != j) {
                                    fail(n, "type-4 roundtrip");
                                    break;
                                }
                                t4.insert(d4);
                            }
                        if (!ok) break;
                    }
            }
            if (ok && n == 3) {
                const DyckWord d = l4_type4_singleton();
                if (!l4_type4_inverse(d).singleton)
                    fail(n, "singleton roundtrip");
                t4.insert(d);
            }
            if (!ok) break;

            Int pair_sum = 0;
            for (int i = 0; i <= n - 7; ++i)
                pair_sum +=
                    (i + 1) * motzkin_number(i) * motzkin_number(n - 7 - i);
            if (Int(t1.size()) != binomial(n - 5, 2) * motzkin_number(n - 7))
                fail(n, "type-1 image size");
            else if (Int(t2.size()) != motzkin_number(n - 5))
                fail(n, "type-2 image size");
            else if (Int(t3.size()) != pair_sum)
                fail(n, "type-3 image size");
            else if (Int(t4.size()) != pair_sum + (n == 3 ? 1 : 0))
                fail(n, "type-4 image size");
            if (!ok) break;

            std::set<DyckWord> all;
            std::size_t total = 0;
            for (const auto* s : {&t1, &t2, &t3, &t4}) {
                total += s->size();
                all.insert(s->begin(), s->end());
            }
            if (all.size() != total) fail(n, "images overlap");
            else if (all != dhat) fail(n, "images do not tile the class");
            else if (Int(dhat.size()) + 2 * count_rs(n, 1, 3) != count_L4(n))
                fail(n, "count_L4 vs brute force");
        }
        add(out, "bijections/L=4 families n<=" + std::to_string(n_max_l4), ok,
            detail);
    }
    return out;
}

// -------------------------------------------------------------------------
// Identity and GF suites
// -------------------------------------------------------------------------

std::vector<CheckResult> check_eq1(int n_max, const OracleLimits& limits) {
    Results out;
    for (int n = 1; n <= n_max; ++n) {
        const Int lhs = enum_321_3cycle(3 * n, limits);
        const Int rhs = weighted_sum_eq1(n, limits);
        add(out, "eq1/n=" + std::to_string(n), lhs == rhs,
            lhs.str() + " vs " + rhs.str());
    }
    return out;
}

std::vector<CheckResult> check_motzkin_functional_eq(int order) {
    Results out;
    const TruncatedSeries m = motzkin_gf(order);
    const TruncatedSeries rhs = TruncatedSeries::constant(1, order) +
                                m.shift(1) + (m * m).shift(2);
    add(out, "gf/motzkin functional equation order " + std::to_string(order),
        m == rhs);
    return out;
}

std::vector<CheckResult> check_gf(int order) {
    Results out;
    append(out, check_motzkin_functional_eq(order));

    // Ballot coefficients against exhaustive first-down counts.
    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= 7 && ok; ++k) {
            const TruncatedSeries gf = ballot_gf(k, 12);
            for (int n = 0; n <= 12 && ok; ++n) {
                const Int brute = Int(enum_ballot(n, k).size());
                if (gf.coeff(n) != brute || ballot_number(n, k) != brute) {
                    ok = false;
                    detail = "T(" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                }
            }
        }
        add(out, "gf/ballot numbers vs enumeration n<=12, k<=7", ok, detail);
    }

    // Row sums of the ballot table give the Motzkin numbers.
    {
        bool ok = true;
        for (int n = 0; n <= 12 && ok; ++n) {
            Int sum = 0;
            for (int k = 1; k <= n + 1; ++k) sum += ballot_number(n, k);
            ok = sum == motzkin_number(n);
        }
        add(out, "gf/ballot row sums are Motzkin numbers", ok);
    }

    // GF coefficients equal the closed forms.
    {
        bool ok = true;
        std::string detail;
        const TruncatedSeries l2 = gf_L2(order);
        for (int n = 0; n <= order && ok; ++n)
            if (l2.coeff(n) != count_L2(n)) {
                ok = false;
                detail = "L2 at n=" + std::to_string(n);
            }
        for (int p : {3, 5, 7, 11, 13, 17, 19}) {
            if (!ok) break;
            const TruncatedSeries lp = gf_Lp(p, order);
            for (int n = 0; n <= order && ok; ++n) {
                const Int want = n >= p ? count_Lp(n, p) : Int(0);
                if (lp.coeff(n) != want) {
                    ok = false;
                    detail = "Lp p=" + std::to_string(p) + " n=" +
                             std::to_string(n);
                }
            }
        }
        for (int r = 1; r <= 6 && ok; ++r)
            for (int s = 1; r + s <= 7 && ok; ++s) {
                const TruncatedSeries g = gf_rs(r, s, order);
                for (int n = 0; n <= order && ok; ++n)
                    if (g.coeff(n) != count_rs(n, r, s)) {
                        ok = false;
                        detail = "rs(" + std::to_string(r) + "," +
                                 std::to_string(s) + ") n=" +
                                 std::to_string(n);
                    }
            }
        add(out, "gf/coefficients equal closed forms order " +
                     std::to_string(order),
            ok, detail);
    }

    // Published GF identities.
    add(out, "gf/rs(1,3) = rs(2,2)", gf_rs(1, 3, order) == gf_rs(2, 2, order));
    add(out, "gf/2 rs(1,2) = Lp(3)",
        gf_rs(1, 2, order) * Int(2) == gf_Lp(3, order));
    {
        bool ok = true;
        for (int n = 4; n <= order && ok; ++n)
            ok = gf_rs(1, 1, order).coeff(n) ==
                 (n - 3) * motzkin_number(n - 4);
        add(out, "gf/rs(1,1) coefficient n is (n-3)M_{n-4}", ok);
    }
    return out;
}

std::vector<CheckResult> check_histogram_threeway(int n_max,
                                                  const OracleLimits& limits) {
    Results out;
    bool ok = true;
    std::string detail;
    const auto fail = [&](int n, const std::string& msg) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + msg;
    };
    for (int n = 1; n <= n_max && ok; ++n) {
        const auto hist = l_histogram(n, 1, limits);
        Int total = 0;
        for (const auto& [l, c] : hist) total += c;
        if (total != catalan_number(n)) {
            fail(n, "histogram total");
            break;
        }
        const auto hist_at = [&](long long k) {
            const auto it = hist.find(Int(k));
            return it == hist.end() ? Int(0) : Int(it->second);
        };
        if (hist_at(1) != count_L1(n)) fail(n, "L=1");
        else if (hist_at(2) != count_L2(n)) fail(n, "L=2");
        else if (hist_at(4) != count_L4(n)) fail(n, "L=4");
        if (!ok) break;
        for (long long p = 3; p <= n && ok; p += 2)
            if (is_prime(p) && hist_at(p) != count_Lp(n, p))
                fail(n, "L=" + std::to_string(p));
        if (ok && n >= 4 && hist_at(6) != count_L6(n, limits).total)
            fail(n, "L=6");
    }
    add(out, "histogram/closed forms agree with enumeration n<=" +
                 std::to_string(n_max),
        ok, detail);
    return out;
}

std::vector<CheckResult> check_l6_sequences(const OracleLimits& limits) {
    static const long long mixed[] = {2, 4, 8, 16, 44, 122, 352, 1028, 3036};
    static const long long totals[] = {3, 6, 14, 34, 92, 252, 710, 2026, 5844};
    Results out;
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 12 && ok; ++n) {
        const L6Breakdown b = count_L6(n, limits);
        if (b.mixed != mixed[n - 4] || b.total != totals[n - 4]) {
            ok = false;
            detail = "n=" + std::to_string(n) + ": mixed " + b.mixed.str() +
                     ", total " + b.total.str();
        }
    }
    add(out, "L6/mixed and total sequences n=4..12", ok, detail);
    return out;
}

std::vector<CheckResult> check_central_identity(int n_max,
                                                const OracleLimits& limits) {
    Results out;
    for (int n = 1; n <= n_max; ++n) {
        bool ok = true;
        std::string detail;
        Int sum = 0;
        for_each_dyck(n, [&](const DyckWord& d) {
            if (!ok) return;
            const Int matched = words_matching(d, limits);
            if (matched != l_statistic(d)) {
                ok = false;
                detail = d.str();
            }
            sum += matched;
        });
        const Int want = binomial(3 * n, n) / (2 * n + 1);
        if (ok && sum != want) {
            ok = false;
            detail = "sum " + sum.str() + " vs " + want.str();
        }
        add(out, "central/words_matching = L over D_" + std::to_string(n), ok,
            detail);
    }
    return out;
}

std::vector<CheckResult> check_rs_sum_dependence(int n_max, int rs_max) {
    Results out;
    bool ok = true;
    std::string detail;
    for (int total = 2; total <= rs_max && ok; ++total)
        for (int n = 1; n <= n_max && ok; ++n) {
            const Int reference = count_rs(n, 1, total - 1);
            for (int r = 2; r < total && ok; ++r)
                if (count_rs(n, r, total - r) != reference) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " r+s=" +
                             std::to_string(total);
                }
        }
    add(out, "rs/count depends only on r+s (r+s<=" + std::to_string(rs_max) +
                 ", n<=" + std::to_string(n_max) + ")",
        ok, detail);
    return out;
}

std::vector<CheckResult> check_histogram_determinism(
    int n, const OracleLimits& limits) {
    Results out;
    const auto reference = l_histogram(n, 1, limits);
    bool ok = true;
    for (int workers : {2, 3, 8})
        ok = ok && l_histogram(n, workers, limits) == reference;
    add(out, "histogram/deterministic across worker counts at n=" +
                 std::to_string(n),
        ok);
    return out;
}

// -------------------------------------------------------------------------
// Suites
// -------------------------------------------------------------------------

std::vector<CheckResult> suite_figures(const OracleLimits& limits) {
    Results out;
    append(out, check_fig_catwords(limits));
    append(out, check_count_table());
    append(out, check_fig_L1());
    append(out, check_fig_L2());
    append(out, check_fig_one_return_table());
    return out;
}

std::vector<CheckResult> suite_bijections(int n_max_rs, int n_max_l4) {
    return check_bijections(n_max_rs, n_max_l4);
}

std::vector<CheckResult> suite_eq1(int n_max, const OracleLimits& limits) {
    return check_eq1(n_max, limits);
}

std::vector<CheckResult> suite_gf(int order) { return check_gf(order); }

std::vector<CheckResult> suite_all(const OracleLimits& limits,
                                   int hist_n_max) {
    Results out;
    append(out, suite_figures(limits));
    append(out, suite_bijections());
    append(out, suite_eq1(3, limits));
    append(out, suite_gf());
    append(out, check_histogram_threeway(hist_n_max, limits));
    append(out, check_l6_sequences(limits));
    append(out, check_central_identity(5, limits));
    append(out, check_rs_sum_dependence());
    append(out, check_histogram_determinism(10, limits));
    return out;
}

} // namespace dyckl::verify
