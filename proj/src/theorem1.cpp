#include "horomean/theorem1.hpp"
#include "horomean/mean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace horomean {

OrderedPrimeList OrderedPrimeList::make(
    std::uint64_t n, std::vector<std::pair<std::uint64_t, std::uint64_t>> entries) {
    std::sort(entries.begin(), entries.end());
    OrderedPrimeList list;
    list.n = n;
    list.entries = std::move(entries);
    return list;
}

OrderedPrimeList order_primes(const ChiFunction& chi, std::uint64_t n, bool exclude_q) {
    const PrimeTable& T = chi.table();
    if (n > T.limit()) throw std::out_of_range("n beyond table limit");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    for (std::uint64_t p : T.primes()) {
        if (p > n) break;
        if (exclude_q && p == T.q()) continue;
        std::uint64_t d;
        if (chi.kind() == ChiKind::psi && p == T.q()) {
            d = 1; // declared variant: q enters as the trivial rotation
        } else {
            UnitRotation v = chi.prime_value(p);
            if (v.is_zero())
                throw unsupported_function_error(
                    "chi vanishes at p=" + std::to_string(p) +
                    "; drop it with exclude_q or use a declared variant");
            if (v.num() == 0)
                d = 1;
            else if (v.num() == 1)
                d = v.den();
            else
                throw unsupported_function_error(
                    "chi(p) is not of the form e^{2 pi i/d} at p=" + std::to_string(p));
        }
        entries.emplace_back(d, p);
    }
    return OrderedPrimeList::make(n, std::move(entries));
}

BoundValue theorem1_bound(const OrderedPrimeList& list) {
    const auto& e = list.entries;
    const std::size_t N = e.size();
    if (N <= 1) return {0.0, false}; // empty sum

    for (const auto& [d, p] : e)
        if (p < 2 || d < 1) throw std::domain_error("bound entries need p >= 2, d >= 1");
    if (list.n < 2) throw std::domain_error("bound needs n >= 2");

    const double logn = std::log(static_cast<double>(list.n));

    // Suffix sums over i = k+1..N of log p_i and log log p_i, built right to
    // left; term k is assembled entirely in log space:
    //   L_k = log d_k - lgamma(N-k+1) + (N-k) log(logn + T_k) - U_k.
    std::vector<double> L(N - 1);
    double T = 0.0, U = 0.0;
    for (std::size_t k = N - 1; k >= 1; --k) {
        double logp = std::log(static_cast<double>(e[k].second)); // p_{k+1} in 1-based terms
        T += logp;
        U += std::log(logp);
        double m = static_cast<double>(N - k);
        L[k - 1] = std::log(static_cast<double>(e[k - 1].first)) - std::lgamma(m + 1.0) +
                   m * std::log(logn + T) - U;
    }

    const double shift = *std::max_element(L.begin(), L.end());
    double s = 0.0;
    for (double l : L) s += std::exp(l - shift);
    const double log_bound = shift + std::log(s) - logn;

    if (log_bound >= std::log(std::numeric_limits<double>::max()))
        return {std::numeric_limits<double>::infinity(), true};
    return {std::exp(log_bound), false};
}

std::vector<BoundReport> verify_bound(const ChiFunction& chi,
                                      std::vector<std::uint64_t> n_values,
                                      bool exclude_q) {
    if (n_values.empty()) return {};
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());

    // One sieve pass gives |M_n| at every requested n. For the kinds that
    // vanish at q the multiples of q drop out of the sum on their own, so the
    // plain mean is also the mean over m coprime to q.
    MeanSeries ms = mean_series(chi, n_values.back(), n_values);

    std::vector<BoundReport> out;
    out.reserve(n_values.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        OrderedPrimeList list = order_primes(chi, n_values[i], exclude_q);
        BoundValue b = theorem1_bound(list);
        double actual = ms.checkpoints[i].magnitude;
        bool holds = actual <= b.value + 1e-9 * std::max(1.0, b.value);
        out.push_back({n_values[i], list.entries.size(), b, actual, holds});
    }
    return out;
}

} // namespace horomean
