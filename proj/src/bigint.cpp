#include "dyckl/bigint.hpp"

namespace dyckl {

Int binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Int result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i; // exact: partial products are binomials
    }
    return result;
}

Int catalan_number(long long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

} // namespace dyckl
