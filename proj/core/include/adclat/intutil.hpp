#pragma once

#include <cstdlib>
#include <vector>

namespace adclat {

// trial-division prime factorization (inputs here are small discriminants)
inline std::vector<std::pair<long long, int>> factor_primes(long long n) {
    std::vector<std::pair<long long, int>> out;
    n = std::llabs(n);
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) {
                n /= d;
                ++k;
            }
            out.push_back({d, k});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline long long squarefree_part(long long n) {
    long long s = n < 0 ? -1 : 1;
    for (auto [p, k] : factor_primes(n))
        if (k % 2 == 1) s *= p;
    return s;
}

} // namespace adclat
