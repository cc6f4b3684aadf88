#pragma once
// Independent reference computations the tests check the library against.
// Each one deliberately takes the dumbest correct route: repeated
// multiplication instead of factored exponents, trial division instead of a
// sieve, direct factorials instead of log-gamma.

#include "horomean/theorem1.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> primes_by_trial_division(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) { prime = false; break; }
        if (prime) out.push_back(n);
    }
    return out;
}

// Order of q mod p by multiplying q onto an accumulator until it returns to 1.
inline std::uint64_t order_by_repeated_multiplication(std::uint64_t q, std::uint64_t p) {
    std::uint64_t acc = q % p;
    std::uint64_t f = 1;
    while (acc != 1) {
        acc = acc * (q % p) % p;
        ++f;
    }
    return f;
}

// The bound evaluated literally: factorials, powers, and products in plain
// double arithmetic. Usable up to N ~ 20 before the factorial overflows.
inline double theorem1_direct(const horomean::OrderedPrimeList& list) {
    const auto& e = list.entries;
    const std::size_t N = e.size();
    if (N <= 1) return 0.0;
    double logn = std::log(static_cast<double>(list.n));
    double total = 0.0;
    for (std::size_t k = 1; k <= N - 1; ++k) {
        double fact = 1.0;
        for (std::size_t i = 1; i <= N - k; ++i) fact *= static_cast<double>(i);
        double logs = 0.0, prod = 1.0;
        for (std::size_t i = k + 1; i <= N; ++i) {
            double lp = std::log(static_cast<double>(e[i - 1].second));
            logs += lp;
            prod *= lp;
        }
        total += static_cast<double>(e[k - 1].first) / fact *
                 std::pow(logn + logs, static_cast<double>(N - k)) / prod;
    }
    return total / static_cast<double>(list.n);
}

} // namespace oracle
