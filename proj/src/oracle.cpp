#include "dyckl/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace dyckl {

namespace {

void check_dyck_bound(int n, const OracleLimits& limits) {
    if (n < 0) throw Error("semilength must be >= 0");
    if (n > limits.max_dyck_semilength)
        throw OracleBoundError("semilength " + std::to_string(n) +
                               " exceeds the Dyck enumeration bound " +
                               std::to_string(limits.max_dyck_semilength));
}

// Depth-first completion of a Dyck prefix, visiting words in u-before-d
// lexicographic order.
void complete_dyck(std::vector<DyckStep>& buf, int n, int ups, int downs,
                   const std::function<void(const DyckWord&)>& fn) {
    if (ups == n && downs == n) {
        fn(DyckWord(buf));
        return;
    }
    if (ups < n) {
        buf.push_back(DyckStep::Up);
        complete_dyck(buf, n, ups + 1, downs, fn);
        buf.pop_back();
    }
    if (downs < ups) {
        buf.push_back(DyckStep::Down);
        complete_dyck(buf, n, ups, downs + 1, fn);
        buf.pop_back();
    }
}

void complete_motzkin(std::vector<MotzkinStep>& buf, int len, int height,
                      const std::function<void(const MotzkinWord&)>& fn) {
    const int remaining = len - static_cast<int>(buf.size());
    if (height > remaining) return;
    if (remaining == 0) {
        fn(MotzkinWord(buf));
        return;
    }
    buf.push_back(MotzkinStep::Up);
    complete_motzkin(buf, len, height + 1, fn);
    buf.back() = MotzkinStep::Flat;
    complete_motzkin(buf, len, height, fn);
    if (height > 0) {
        buf.back() = MotzkinStep::Down;
        complete_motzkin(buf, len, height - 1, fn);
    }
    buf.pop_back();
}

} // namespace

const OracleLimits& default_limits() {
    static const OracleLimits limits{};
    return limits;
}

void for_each_dyck(int n, const std::function<void(const DyckWord&)>& fn,
                   const OracleLimits& limits) {
    check_dyck_bound(n, limits);
    std::vector<DyckStep> buf;
    buf.reserve(2 * n);
    complete_dyck(buf, n, 0, 0, fn);
}

std::vector<DyckWord> enum_dyck(int n, const OracleLimits& limits) {
    std::vector<DyckWord> out;
    for_each_dyck(n, [&](const DyckWord& d) { out.push_back(d); }, limits);
    return out;
}

void for_each_motzkin(int len,
                      const std::function<void(const MotzkinWord&)>& fn) {
    if (len < 0) throw Error("length must be >= 0");
    std::vector<MotzkinStep> buf;
    buf.reserve(len);
    complete_motzkin(buf, len, 0, fn);
}

std::vector<MotzkinWord> enum_motzkin(int len) {
    std::vector<MotzkinWord> out;
    for_each_motzkin(len, [&](const MotzkinWord& m) { out.push_back(m); });
    return out;
}

std::vector<MotzkinWord> enum_ballot(int len, int k) {
    std::vector<MotzkinWord> out;
    if (k < 1 || len < k - 1) return out;
    for_each_motzkin(len, [&](const MotzkinWord& m) {
        const int fd = first_down_pos(m);
        if (fd == k || (fd == 0 && len == k - 1)) out.push_back(m);
    });
    return out;
}

std::map<Int, long long> l_histogram(int n, int workers,
                                     const OracleLimits& limits) {
    check_dyck_bound(n, limits);
    if (workers < 1) workers = 1;
    if (workers == 1 || n < 4) {
        std::map<Int, long long> hist;
        for_each_dyck(
            n, [&](const DyckWord& d) { ++hist[l_statistic(d)]; }, limits);
        return hist;
    }

    // Split the search space at a fixed prefix depth; each worker completes
    // a deterministic subset of the prefixes, and the merged histogram is
    // independent of the worker count because the prefixes partition D_n.
    const int depth = std::min(2 * n - 1, 8);
    std::vector<std::vector<DyckStep>> prefixes;
    {
        std::vector<DyckStep> buf;
        const std::function<void(int, int)> rec = [&](int ups, int downs) {
            if (static_cast<int>(buf.size()) == depth) {
                prefixes.push_back(buf);
                return;
            }
            if (ups < n) {
                buf.push_back(DyckStep::Up);
                rec(ups + 1, downs);
                buf.pop_back();
            }
            if (downs < ups) {
                buf.push_back(DyckStep::Down);
                rec(ups, downs + 1);
                buf.pop_back();
            }
        };
        rec(0, 0);
    }

    std::vector<std::map<Int, long long>> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < prefixes.size();
                 i += static_cast<std::size_t>(workers)) {
                std::vector<DyckStep> buf = prefixes[i];
                int ups = 0;
                for (DyckStep s : buf)
                    if (s == DyckStep::Up) ++ups;
                const int downs = static_cast<int>(buf.size()) - ups;
                complete_dyck(buf, n, ups, downs, [&](const DyckWord& d) {
                    ++partial[w][l_statistic(d)];
                });
            }
        });
    }
    for (auto& t : threads) t.join();

    std::map<Int, long long> hist;
    for (const auto& part : partial)
        for (const auto& [l, count] : part) hist[l] += count;
    return hist;
}

std::map<std::pair<Int, int>, long long> l_returns_histogram(
    int n, const OracleLimits& limits) {
    std::map<std::pair<Int, int>, long long> hist;
    for_each_dyck(
        n,
        [&](const DyckWord& d) { ++hist[{l_statistic(d), returns(d)}]; },
        limits);
    return hist;
}

std::vector<CatalanWord> enum_catalan_words(int n,
                                            const OracleLimits& limits) {
    if (n < 0) throw Error("n must be >= 0");
    if (n > limits.max_catalan_words_n)
        throw OracleBoundError("n = " + std::to_string(n) +
                               " exceeds the Catalan word bound " +
                               std::to_string(limits.max_catalan_words_n));
    std::vector<CatalanWord> out;
    std::vector<CatalanLetter> buf;
    buf.reserve(3 * n);
    const std::function<void(int, int, int)> rec = [&](int x, int y, int z) {
        if (x == n && y == n && z == n) {
            out.push_back(CatalanWord(buf));
            return;
        }
        if (x < n) {
            buf.push_back(CatalanLetter::X);
            rec(x + 1, y, z);
            buf.pop_back();
        }
        if (y < x) {
            buf.push_back(CatalanLetter::Y);
            rec(x, y + 1, z);
            buf.pop_back();
        }
        if (z < y) {
            buf.push_back(CatalanLetter::Z);
            rec(x, y, z + 1);
            buf.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

DyckWord d_xy(const CatalanWord& c) {
    std::vector<DyckStep> steps;
    for (CatalanLetter l : c.letters()) {
        if (l == CatalanLetter::X) steps.push_back(DyckStep::Up);
        else if (l == CatalanLetter::Y) steps.push_back(DyckStep::Down);
    }
    return DyckWord(std::move(steps));
}

DyckWord d_yz(const CatalanWord& c) {
    std::vector<DyckStep> steps;
    for (CatalanLetter l : c.letters()) {
        if (l == CatalanLetter::Y) steps.push_back(DyckStep::Up);
        else if (l == CatalanLetter::Z) steps.push_back(DyckStep::Down);
    }
    return DyckWord(std::move(steps));
}

std::vector<CatalanWord> matching_words(const DyckWord& d,
                                        const OracleLimits& limits) {
    std::vector<CatalanWord> out;
    for (const CatalanWord& c : enum_catalan_words(d.semilength(), limits))
        if (d_xy(c) == d && d_yz(c) == d) out.push_back(c);
    return out;
}

Int words_matching(const DyckWord& d, const OracleLimits& limits) {
    return Int(matching_words(d, limits).size());
}

namespace {

bool avoids_321(const std::vector<int>& p) {
    const int m = static_cast<int>(p.size());
    // p contains 321 iff some middle element has a larger value before it
    // and a smaller one after it.
    std::vector<int> prefix_max(m), suffix_min(m);
    int best = -1;
    for (int i = 0; i < m; ++i) {
        prefix_max[i] = best;
        best = std::max(best, p[i]);
    }
    int low = m + 1;
    for (int i = m - 1; i >= 0; --i) {
        suffix_min[i] = low;
        low = std::min(low, p[i]);
    }
    for (int i = 0; i < m; ++i)
        if (prefix_max[i] > p[i] && p[i] > suffix_min[i]) return false;
    return true;
}

// Visits every permutation of 0..m-1 whose cycles are all 3-cycles by
// anchoring each cycle at its smallest element.
void build_3cycles(std::vector<int>& perm, std::vector<bool>& used,
                   int assigned, Int& count) {
    const int m = static_cast<int>(perm.size());
    if (assigned == m) {
        if (avoids_321(perm)) ++count;
        return;
    }
    int a = 0;
    while (used[a]) ++a;
    used[a] = true;
    for (int b = a + 1; b < m; ++b) {
        if (used[b]) continue;
        used[b] = true;
        for (int c = a + 1; c < m; ++c) {
            if (used[c]) continue;
            used[c] = true;
            perm[a] = b;
            perm[b] = c;
            perm[c] = a;
            build_3cycles(perm, used, assigned + 3, count);
            used[c] = false;
        }
        used[b] = false;
    }
    used[a] = false;
}

} // namespace

Int enum_321_3cycle(int m, const OracleLimits& limits) {
    if (m <= 0 || m % 3 != 0)
        throw Error("length must be a positive multiple of 3");
    if (m > limits.max_perm_length)
        throw OracleBoundError("length " + std::to_string(m) +
                               " exceeds the permutation bound " +
                               std::to_string(limits.max_perm_length));
    std::vector<int> perm(m, -1);
    std::vector<bool> used(m, false);
    Int count = 0;
    build_3cycles(perm, used, 0, count);
    return count;
}

Int filter_by_star_signature(int n, std::vector<Int> signature,
                             const OracleLimits& limits) {
    std::sort(signature.begin(), signature.end());
    Int count = 0;
    std::vector<Int> factors;
    for_each_dyck(
        n,
        [&](const DyckWord& d) {
            factors.clear();
            for (const auto& [r, s] : rs_array(d).cols)
                if (r > 0 && s > 0) factors.push_back(binomial(r + s, r));
            std::sort(factors.begin(), factors.end());
            if (factors == signature) ++count;
        },
        limits);
    return count;
}

} // namespace dyckl
