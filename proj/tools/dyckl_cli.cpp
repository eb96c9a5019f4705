// Command-line surface for the Dyck-path statistic library: counting tables,
// series coefficients, bijection application, and verification suites.
// Data goes to standard output, diagnostics to standard error.
//
// Exit codes: 0 success, 1 verification failure, 2 bad flags or word parse
// error, 3 enumeration bound exceeded, 4 not an odd prime, 5 bijection
// domain violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyckl/bijections.hpp"
#include "dyckl/counting.hpp"
#include "dyckl/series.hpp"
#include "dyckl/verify.hpp"
#include "dyckl/words.hpp"

namespace {

using dyckl::Int;
using nlohmann::json;

enum class Format { Csv, Json };

struct GlobalOptions {
    Format format = Format::Csv;
    dyckl::OracleLimits limits{12, 5, 9}; // CLI defaults, overridable
};

int env_or(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (!value) return fallback;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(name) + ": not an integer");
    }
}

struct Range {
    int lo = 1;
    int hi = 1;
};

Range parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
        if (r.lo > r.hi) throw CLI::ValidationError("empty range " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("bad range '" + text + "' (use N or A..B)");
    }
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountOptions {
    std::string n_range = "1..9";
    int k = 0;
    std::vector<int> rs;
    bool sum_eq1 = false;
    bool with_gf = false;
    bool with_oracle = false;
};

struct ReportRow {
    int n;
    std::string target;
    std::optional<Int> closed_form;
    std::optional<Int> gf;
    std::optional<Int> oracle;
    std::string method;

    bool agree() const {
        std::vector<const Int*> present;
        for (const auto* v : {&closed_form, &gf, &oracle})
            if (v->has_value()) present.push_back(&v->value());
        for (std::size_t i = 1; i < present.size(); ++i)
            if (*present[i] != *present[0]) return false;
        return true;
    }
};

std::string opt_str(const std::optional<Int>& v) {
    return v ? v->str() : "";
}

void emit_rows(const std::vector<ReportRow>& rows, Format format) {
    if (format == Format::Csv) {
        std::cout << "n,target,closed_form,gf,oracle,agree,method\n";
        for (const ReportRow& row : rows)
            std::cout << row.n << ',' << row.target << ','
                      << opt_str(row.closed_form) << ',' << opt_str(row.gf)
                      << ',' << opt_str(row.oracle) << ','
                      << (row.agree() ? "true" : "false") << ',' << row.method
                      << '\n';
        return;
    }
    json out = json::array();
    for (const ReportRow& row : rows) {
        json j;
        j["n"] = row.n;
        j["target"] = row.target;
        j["closed_form"] =
            row.closed_form ? json(row.closed_form->str()) : json(nullptr);
        j["gf"] = row.gf ? json(row.gf->str()) : json(nullptr);
        j["oracle"] = row.oracle ? json(row.oracle->str()) : json(nullptr);
        j["agree"] = row.agree();
        j["method"] = row.method;
        out.push_back(j);
    }
    std::cout << out.dump(2) << '\n';
}

// Exhaustive |D_n^{r,s}|: single-star words whose star column is (r,s).
Int brute_rs_count(int n, int r, int s, const dyckl::OracleLimits& limits) {
    Int count = 0;
    dyckl::for_each_dyck(
        n,
        [&](const dyckl::DyckWord& d) {
            const dyckl::StarWord w = dyckl::to_star_word(d);
            if (w.star_count() != 1) return;
            const auto ctx = dyckl::star_context(w);
            const auto col = dyckl::rs_array(d).cols[ctx.stars[0].pos - 1];
            if (col.first == r && col.second == s) ++count;
        },
        limits);
    return count;
}

int run_count(const GlobalOptions& global, const CountOptions& opt) {
    const Range range = parse_range(opt.n_range);
    const int modes = (opt.k > 0) + !opt.rs.empty() + opt.sum_eq1;
    if (modes != 1)
        throw CLI::ValidationError(
            "choose exactly one of --k, --rs, --sum-eq1");

    std::vector<ReportRow> rows;
    for (int n = range.lo; n <= range.hi; ++n) {
        ReportRow row;
        row.n = n;
        if (opt.sum_eq1) {
            row.target = "sum-eq1";
            row.oracle = dyckl::weighted_sum_eq1(n, global.limits);
            row.method = "oracle";
        } else if (!opt.rs.empty()) {
            const int r = opt.rs[0], s = opt.rs[1];
            row.target = "rs=" + std::to_string(r) + "+" + std::to_string(s);
            row.closed_form = dyckl::count_rs(n, r, s);
            row.method = "closed-form";
            if (opt.with_gf) row.gf = dyckl::gf_rs(r, s, n).coeff(n);
            if (opt.with_oracle)
                row.oracle = brute_rs_count(n, r, s, global.limits);
        } else {
            row.target = "L=" + std::to_string(opt.k);
            const dyckl::CountValue cv =
                dyckl::count_L(n, opt.k, global.limits);
            row.method = dyckl::method_name(cv.method);
            if (cv.method == dyckl::CountMethod::OracleOnly) {
                row.oracle = cv.value;
                std::cerr << "note: no closed form implemented for L="
                          << opt.k << "; histogram value reported\n";
            } else {
                row.closed_form = cv.value;
                if (cv.method == dyckl::CountMethod::HybridOracleMixed)
                    std::cerr << "note: L=6 mixed {2,3} component is "
                                 "brute-forced\n";
            }
            if (opt.with_gf) {
                if (opt.k == 1)
                    row.gf = n >= 1 ? dyckl::motzkin_number(n - 1) : Int(0);
                else if (opt.k == 2)
                    row.gf = dyckl::gf_L2(n).coeff(n);
                else if (opt.k >= 3 && dyckl::is_prime(opt.k) && opt.k % 2)
                    row.gf = dyckl::gf_Lp(opt.k, n).coeff(n);
            }
            if (opt.with_oracle &&
                cv.method != dyckl::CountMethod::OracleOnly) {
                const auto hist = dyckl::l_histogram(n, 1, global.limits);
                const auto it = hist.find(Int(opt.k));
                row.oracle = it == hist.end() ? Int(0) : Int(it->second);
            }
        }
        rows.push_back(std::move(row));
    }
    emit_rows(rows, global.format);
    return 0;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct SeriesOptions {
    int order = 10;
    bool motzkin = false;
    bool l2 = false;
    int lp = 0;
    std::vector<int> rs;
    int ballot = 0;
};

int run_series(const GlobalOptions& global, const SeriesOptions& opt) {
    const int modes =
        opt.motzkin + opt.l2 + (opt.lp > 0) + !opt.rs.empty() + (opt.ballot > 0);
    if (modes != 1)
        throw CLI::ValidationError(
            "choose exactly one of --motzkin, --l2, --lp, --rs, --ballot");
    if (opt.order < 0) throw CLI::ValidationError("--order must be >= 0");

    std::string name;
    dyckl::TruncatedSeries series(0);
    if (opt.motzkin) {
        name = "motzkin";
        series = dyckl::motzkin_gf(opt.order);
    } else if (opt.l2) {
        name = "L2";
        series = dyckl::gf_L2(opt.order);
    } else if (opt.lp > 0) {
        name = "L" + std::to_string(opt.lp);
        series = dyckl::gf_Lp(opt.lp, opt.order);
    } else if (!opt.rs.empty()) {
        name = "rs=" + std::to_string(opt.rs[0]) + "+" +
               std::to_string(opt.rs[1]);
        series = dyckl::gf_rs(opt.rs[0], opt.rs[1], opt.order);
    } else {
        name = "ballot k=" + std::to_string(opt.ballot);
        series = dyckl::ballot_gf(opt.ballot, opt.order);
    }

    if (global.format == Format::Csv) {
        std::cout << "n,coefficient\n";
        for (int k = 0; k <= series.order(); ++k)
            std::cout << k << ',' << series.coeff(k) << '\n';
    } else {
        json j;
        j["series"] = name;
        j["order"] = series.order();
        json coeffs = json::array();
        for (int k = 0; k <= series.order(); ++k)
            coeffs.push_back(series.coeff(k).str());
        j["coefficients"] = coeffs;
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------------

void emit_word_report(Format format,
                      const std::vector<std::pair<std::string, std::string>>&
                          fields,
                      const dyckl::DyckWord& d) {
    const dyckl::StarWord w = dyckl::to_star_word(d);
    std::string stars;
    for (const auto& star : dyckl::star_context(w).stars) {
        if (!stars.empty()) stars += ';';
        stars += std::to_string(star.pos);
    }
    if (format == Format::Csv) {
        for (const auto& [key, value] : fields)
            std::cout << key << '=' << value << '\n';
        std::cout << "certificate: L=" << dyckl::l_statistic(d)
                  << " returns=" << dyckl::returns(d) << " stars=" << stars
                  << '\n';
    } else {
        json j;
        for (const auto& [key, value] : fields) j[key] = value;
        j["certificate"] = {{"L", dyckl::l_statistic(d).str()},
                            {"returns", dyckl::returns(d)},
                            {"star_positions", stars}};
        std::cout << j.dump(2) << '\n';
    }
}

struct BijectionOptions {
    std::string word;     // positional word for to-star/from-star/inverse
    std::string family;   // for inverse
    std::string m, p;
    int j = 1, j1 = 1, j2 = 2, r = 1, s = 1;
    bool singleton = false;
};

int run_bijection_forward(const GlobalOptions& global, const std::string& op,
                          const BijectionOptions& opt) {
    using namespace dyckl;
    if (op == "to-star") {
        const DyckWord d = DyckWord::parse(opt.word);
        emit_word_report(global.format,
                         {{"mstar", to_star_word(d).str()}}, d);
        return 0;
    }
    if (op == "from-star") {
        const DyckWord d = from_star_word(StarWord::parse(opt.word));
        emit_word_report(global.format, {{"dyck", d.str()}}, d);
        return 0;
    }

    DyckWord d;
    if (op == "rshit2") {
        d = rs_two_returns_forward(MotzkinWord::parse(opt.p), opt.r, opt.s);
    } else if (op == "rshit1") {
        d = rs_one_return_forward(MotzkinWord::parse(opt.m),
                                  MotzkinWord::parse(opt.p), opt.j, opt.r,
                                  opt.s);
    } else if (op == "l4-t1") {
        d = l4_type1_forward(MotzkinWord::parse(opt.m), opt.j1, opt.j2);
    } else if (op == "l4-t2") {
        d = l4_type2_forward(MotzkinWord::parse(opt.m));
    } else if (op == "l4-t3") {
        d = l4_type3_forward(MotzkinWord::parse(opt.m),
                             MotzkinWord::parse(opt.p), opt.j);
    } else if (op == "l4-t4") {
        d = opt.singleton ? l4_type4_singleton()
                          : l4_type4_forward(MotzkinWord::parse(opt.m),
                                             MotzkinWord::parse(opt.p), opt.j);
    } else {
        throw CLI::ValidationError("unknown bijection " + op);
    }
    emit_word_report(global.format,
                     {{"mstar", to_star_word(d).str()}, {"dyck", d.str()}}, d);
    return 0;
}

int run_bijection_inverse(const GlobalOptions& global,
                          const BijectionOptions& opt) {
    using namespace dyckl;
    const DyckWord d = DyckWord::parse(opt.word);
    std::vector<std::pair<std::string, std::string>> fields;
    if (opt.family == "rshit2") {
        const auto pre = rs_two_returns_inverse(d);
        fields = {{"p", pre.p.str()},
                  {"r", std::to_string(pre.r)},
                  {"s", std::to_string(pre.s)}};
    } else if (opt.family == "rshit1") {
        const auto pre = rs_one_return_inverse(d);
        fields = {{"m", pre.m.str()},
                  {"p", pre.p.str()},
                  {"j", std::to_string(pre.j)},
                  {"r", std::to_string(pre.r)},
                  {"s", std::to_string(pre.s)}};
    } else if (opt.family == "l4-t1") {
        const auto pre = l4_type1_inverse(d);
        fields = {{"m", pre.m.str()},
                  {"j1", std::to_string(pre.j1)},
                  {"j2", std::to_string(pre.j2)}};
    } else if (opt.family == "l4-t2") {
        fields = {{"m", l4_type2_inverse(d).str()}};
    } else if (opt.family == "l4-t3") {
        const auto pre = l4_type3_inverse(d);
        fields = {{"m", pre.m.str()},
                  {"p", pre.p.str()},
                  {"j", std::to_string(pre.j)}};
    } else if (opt.family == "l4-t4") {
        const auto pre = l4_type4_inverse(d);
        if (pre.singleton) {
            fields = {{"singleton", "true"}};
        } else {
            fields = {{"m", pre.m.str()},
                      {"p", pre.p.str()},
                      {"j", std::to_string(pre.j)}};
        }
    } else {
        throw CLI::ValidationError("unknown family " + opt.family);
    }
    emit_word_report(global.format, fields, d);
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string suite = "all";
    int n = 0;     // suite-specific size bound; 0 = default
    int l4_n = 11; // L=4 family bound for the bijections suite
    int order = 20;
};

int run_verify(const GlobalOptions& global, const VerifyOptions& opt) {
    using namespace dyckl::verify;
    std::vector<CheckResult> results;
    if (opt.suite == "figures") {
        results = suite_figures(global.limits);
    } else if (opt.suite == "bijections") {
        results = suite_bijections(opt.n ? opt.n : 10, opt.l4_n);
    } else if (opt.suite == "eq1") {
        results = suite_eq1(opt.n ? opt.n : 3, global.limits);
    } else if (opt.suite == "gf") {
        results = suite_gf(opt.order);
    } else if (opt.suite == "all") {
        results = suite_all(global.limits,
                            std::min(opt.n ? opt.n : 12,
                                     global.limits.max_dyck_semilength));
    } else {
        throw CLI::ValidationError("unknown suite " + opt.suite);
    }

    bool all_pass = true;
    for (const CheckResult& check : results) {
        all_pass = all_pass && check.pass;
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name;
        if (!check.pass && !check.detail.empty())
            std::cout << " [" << check.detail << "]";
        std::cout << '\n';
    }
    std::cout << (all_pass ? "OK" : "FAILED") << " (" << results.size()
              << " checks)\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of Dyck paths by the Catalan-word "
                 "statistic L"};
    app.require_subcommand(1);

    GlobalOptions global;
    global.limits.max_dyck_semilength = env_or("DYCKL_MAX_ORACLE_N", 12);
    global.limits.max_catalan_words_n = env_or("DYCKL_MAX_CATALAN_N", 5);
    global.limits.max_perm_length = env_or("DYCKL_MAX_PERM_LEN", 9);

    std::string format = "csv";
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--max-oracle-n", global.limits.max_dyck_semilength,
                   "Dyck enumeration bound (env DYCKL_MAX_ORACLE_N)");
    app.add_option("--max-catalan-n", global.limits.max_catalan_words_n,
                   "Catalan-word enumeration bound (env DYCKL_MAX_CATALAN_N)");
    app.add_option("--max-perm-len", global.limits.max_perm_length,
                   "permutation length bound (env DYCKL_MAX_PERM_LEN)");

    // count
    CountOptions count_opt;
    CLI::App* count = app.add_subcommand("count", "counting tables");
    count->add_option("--k", count_opt.k, "target statistic value L = k");
    count->add_option("--rs", count_opt.rs, "target class (r,s)")
        ->expected(2);
    count->add_flag("--sum-eq1", count_opt.sum_eq1,
                    "weighted sum of L(D) 2^returns(D)");
    count->add_option("--n", count_opt.n_range, "semilength or range A..B");
    count->add_flag("--with-gf", count_opt.with_gf,
                    "add a generating-function column");
    count->add_flag("--with-oracle", count_opt.with_oracle,
                    "add a brute-force column");

    // series
    SeriesOptions series_opt;
    CLI::App* series = app.add_subcommand("series", "series coefficients");
    series->add_flag("--motzkin", series_opt.motzkin, "Motzkin numbers");
    series->add_flag("--l2", series_opt.l2, "generating function for L=2");
    series->add_option("--lp", series_opt.lp,
                       "generating function for L=p, odd prime p");
    series->add_option("--rs", series_opt.rs, "generating function for (r,s)")
        ->expected(2);
    series->add_option("--ballot", series_opt.ballot,
                       "ballot numbers T_{n,k} for fixed k");
    series->add_option("--order", series_opt.order, "truncation order");

    // bijection
    BijectionOptions bij_opt;
    CLI::App* bijection =
        app.add_subcommand("bijection", "apply a constructive bijection");
    bijection->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> forward_ops;
    for (const char* name :
         {"to-star", "from-star", "rshit2", "rshit1", "l4-t1", "l4-t2",
          "l4-t3", "l4-t4"}) {
        CLI::App* sub = bijection->add_subcommand(name);
        if (std::string(name) == "to-star" ||
            std::string(name) == "from-star") {
            sub->add_option("word", bij_opt.word)->required();
        } else {
            sub->add_option("--m", bij_opt.m, "Motzkin word M");
            sub->add_option("--p", bij_opt.p, "Motzkin word P");
            sub->add_option("--j", bij_opt.j, "insertion position");
            sub->add_option("--j1", bij_opt.j1, "first star position");
            sub->add_option("--j2", bij_opt.j2, "second star position");
            sub->add_option("--r", bij_opt.r, "r");
            sub->add_option("--s", bij_opt.s, "s");
            sub->add_flag("--singleton", bij_opt.singleton,
                          "the n=3 special path (l4-t4 only)");
        }
        forward_ops.emplace_back(name, sub);
    }
    CLI::App* inverse = bijection->add_subcommand(
        "inverse", "recover the preimage of a Dyck word");
    inverse
        ->add_option("family", bij_opt.family,
                     "rshit2|rshit1|l4-t1|l4-t2|l4-t3|l4-t4")
        ->required();
    inverse->add_option("word", bij_opt.word, "Dyck word")->required();

    // verify
    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify
        ->add_option("suite", verify_opt.suite,
                     "all|figures|bijections|eq1|gf")
        ->required();
    verify->add_option("--n", verify_opt.n, "suite size bound");
    verify->add_option("--l4-n", verify_opt.l4_n,
                       "L=4 bound for the bijections suite");
    verify->add_option("--order", verify_opt.order,
                       "series order for the gf suite");

    try {
        app.parse(argc, argv);
        global.format = format == "json" ? Format::Json : Format::Csv;

        if (*count) return run_count(global, count_opt);
        if (*series) return run_series(global, series_opt);
        if (*bijection) {
            if (*inverse) return run_bijection_inverse(global, bij_opt);
            for (const auto& [name, sub] : forward_ops)
                if (*sub) return run_bijection_forward(global, name, bij_opt);
        }
        if (*verify) return run_verify(global, verify_opt);
        throw CLI::ValidationError("no subcommand selected");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const dyckl::OracleBoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const dyckl::NotPrimeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const dyckl::BallotPreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const dyckl::IndexOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const dyckl::WrongStarCountError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const dyckl::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const dyckl::InvalidCharacterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dyckl::PrefixViolationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dyckl::UnbalancedWordError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const dyckl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
