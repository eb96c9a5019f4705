#pragma once

#include <vector>

#include "dyckl/bigint.hpp"
#include "dyckl/errors.hpp"

namespace dyckl {

// Exact truncated power series over unbounded integers. Arithmetic on two
// series of orders N1 and N2 yields order min(N1, N2); coefficients are
// always exact. Operations never silently extend the truncation order.
class TruncatedSeries {
public:
    // Zero series of the given order (coefficients c_0..c_N).
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Int> coeffs);

    static TruncatedSeries constant(const Int& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Int& c) const;

    // Nonnegative integer power; pow(0) is the constant 1 at the same order.
    TruncatedSeries pow(int e) const;

    // Formal derivative: (sum c_n x^n)' = sum n c_n x^{n-1}; order drops by 1.
    TruncatedSeries derivative() const;

    // Multiplication by x^m; the order is unchanged.
    TruncatedSeries shift(int m) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Int> coeffs_;
};

// Motzkin numbers M_0..M_N via the recurrence
// M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}.
std::vector<Int> motzkin_numbers(int order);

// M_n with the convention M_n = 0 for n < 0.
Int motzkin_number(int n);

// Generating function m(x) of the Motzkin numbers, truncated at `order`.
TruncatedSeries motzkin_gf(int order);

// Generating function of the Motzkin ballot numbers T_{n,k} for fixed k:
// (1 + x m(x))^{k-1} x^{k-1}.
TruncatedSeries ballot_gf(int k, int order);

// Motzkin ballot number T_{n,k}: Motzkin paths of length n with their first
// down step in position k; T_{k-1,k} = 1 (the all-horizontal path). Returns
// 0 for k < 1 or n < k-1.
Int ballot_number(int n, int k);

// Generating function for the number of Dyck paths with L = 2:
// x^2 + x^4 (x m(x))'.
TruncatedSeries gf_L2(int order);

// Generating function for the number of Dyck paths with L = p, p an odd
// prime: 2 x^p (1 + x m(x))^{p-2} (x^2 (x m(x))' + 1).
TruncatedSeries gf_Lp(int p, int order);

// Generating function for |D_n^{r,s}|:
// x^{r+s} (1 + x m(x))^{r+s-2} (1 + x^2 (x m(x))').
TruncatedSeries gf_rs(int r, int s, int order);

// Deterministic trial-division primality check (inputs are tiny).
bool is_prime(long long p);

// Throws NotPrimeError unless p is a prime >= 3.
void require_odd_prime(long long p);

} // namespace dyckl
