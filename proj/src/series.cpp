#include "dyckl/series.hpp"

#include <algorithm>
#include <string>

namespace dyckl {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw Error("series order must be >= 0");
    coeffs_.assign(order + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("series needs at least c_0");
}

TruncatedSeries TruncatedSeries::constant(const Int& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

const Int& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order())
        throw Error("coefficient index " + std::to_string(k) +
                    " outside truncation order " + std::to_string(order()));
    return coeffs_[k];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (int k = 0; k <= n; ++k) out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (int k = 0; k <= n; ++k) out.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const int n = std::min(order(), o.order());
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Int& c) const {
    TruncatedSeries out = *this;
    for (Int& v : out.coeffs_) v *= c;
    return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw Error("series power must be >= 0");
    TruncatedSeries result = constant(1, order());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) throw Error("cannot differentiate an order-0 series");
    TruncatedSeries out(order() - 1);
    for (int k = 0; k < order(); ++k) out.coeffs_[k] = (k + 1) * coeffs_[k + 1];
    return out;
}

TruncatedSeries TruncatedSeries::shift(int m) const {
    if (m < 0) throw Error("shift exponent must be >= 0");
    TruncatedSeries out(order());
    for (int k = m; k <= order(); ++k) out.coeffs_[k] = coeffs_[k - m];
    return out;
}

std::vector<Int> motzkin_numbers(int order) {
    if (order < 0) return {};
    std::vector<Int> m(order + 1);
    m[0] = 1;
    for (int n = 1; n <= order; ++n) {
        m[n] = m[n - 1];
        for (int k = 0; k <= n - 2; ++k) m[n] += m[k] * m[n - 2 - k];
    }
    return m;
}

Int motzkin_number(int n) {
    if (n < 0) return 0;
    return motzkin_numbers(n)[n];
}

TruncatedSeries motzkin_gf(int order) {
    return TruncatedSeries(motzkin_numbers(order));
}

namespace {

// 1 + x m(x), the workhorse factor of the ballot generating functions.
TruncatedSeries one_plus_xm(int order) {
    return TruncatedSeries::constant(1, order) + motzkin_gf(order).shift(1);
}

// x^2 (x m(x))' at the given order; used by the L-statistic GFs.
TruncatedSeries x2_d_xm(int order) {
    // (x m)' needs coefficients of x m one past where we read, so build the
    // prerequisite one order higher and truncate via the derivative.
    TruncatedSeries xm = motzkin_gf(order + 1).shift(1);
    return xm.derivative().shift(2);
}

} // namespace

TruncatedSeries ballot_gf(int k, int order) {
    if (k < 1) throw Error("ballot index k must be >= 1");
    return one_plus_xm(order).pow(k - 1).shift(k - 1);
}

Int ballot_number(int n, int k) {
    if (k < 1 || n < k - 1) return 0;
    return ballot_gf(k, n).coeff(n);
}

TruncatedSeries gf_L2(int order) {
    TruncatedSeries x2 = TruncatedSeries::constant(1, order).shift(2);
    TruncatedSeries xm = motzkin_gf(order + 1).shift(1);
    return x2 + xm.derivative().shift(4);
}

TruncatedSeries gf_Lp(int p, int order) {
    require_odd_prime(p);
    TruncatedSeries inner =
        x2_d_xm(order) + TruncatedSeries::constant(1, order);
    TruncatedSeries s = one_plus_xm(order).pow(p - 2) * inner;
    return (s * Int(2)).shift(p);
}

TruncatedSeries gf_rs(int r, int s, int order) {
    if (r < 1 || s < 1) throw Error("r and s must be >= 1");
    TruncatedSeries inner =
        TruncatedSeries::constant(1, order) + x2_d_xm(order);
    return (one_plus_xm(order).pow(r + s - 2) * inner).shift(r + s);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_odd_prime(long long p) {
    if (p < 3 || !is_prime(p))
        throw NotPrimeError(std::to_string(p) + " is not an odd prime");
}

} // namespace dyckl
