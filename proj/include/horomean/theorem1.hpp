#pragma once
// The explicit mean-value bound. For a completely multiplicative chi whose
// value at every prime p_i <= n is a root of unity e^{2 pi i / d_i}, with the
// pairs sorted so d_1 <= ... <= d_N (ties by ascending p),
//
//   |M_n(chi)| <= (1/n) * sum_{k=1}^{N-1}  d_k / (N-k)!
//                 * (log n + sum_{i>k} log p_i)^(N-k) / prod_{i>k} log p_i .
//
// Terms are astronomically large for big N, so everything is evaluated in log
// space and only exponentiated after a max shift.

#include "horomean/chi.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace horomean {

// A prime value that is neither Zero (outside the declared conventions) nor
// of the form e^{2 pi i / d} cannot feed the bound.
class unsupported_function_error : public std::domain_error {
    using std::domain_error::domain_error;
};

struct OrderedPrimeList {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries; // (d, p)

    // Normalizes to the (d, p)-sorted form the bound is defined on, so the
    // result never depends on input presentation order.
    static OrderedPrimeList make(std::uint64_t n,
                                 std::vector<std::pair<std::uint64_t, std::uint64_t>> entries);
};

// Collects (d, p) for every prime p <= n. Declared variants for the kinds
// that vanish at q: with exclude_q the prime q is dropped from the list
// entirely; without it, psi maps q to d = 1. Any other Zero or a numerator
// above 1 raises unsupported_function_error.
OrderedPrimeList order_primes(const ChiFunction& chi, std::uint64_t n, bool exclude_q = false);

struct BoundValue {
    double value = 0.0;
    bool overflow = false; // value is +infinity and the inequality is vacuous
};

BoundValue theorem1_bound(const OrderedPrimeList& list);

struct BoundReport {
    std::uint64_t n;
    std::uint64_t N;
    BoundValue bound;
    double actual; // |M_n(chi)| from the sieve pass
    bool holds;    // actual <= bound + 1e-9 * max(1, bound)
};

std::vector<BoundReport> verify_bound(const ChiFunction& chi,
                                      std::vector<std::uint64_t> n_values,
                                      bool exclude_q = false);

} // namespace horomean
