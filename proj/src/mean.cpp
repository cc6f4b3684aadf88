#include "horomean/mean.hpp"
#include "horomean/summation.hpp"

#include <algorithm>
#include <cmath>

namespace horomean {

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be positive");
    std::vector<std::uint64_t> cps;
    // 10^(j/4) split into an exact integer power times 10^(r/4); only r = 0
    // lands on integers, so ceil never sits on a rounding knife edge.
    static const long double quarter[4] = {
        1.0L,
        1.77827941003892280122542119519268484L,  // 10^(1/4)
        3.16227766016837933199889354443271853L,  // 10^(1/2)
        5.62341325190349080394951039776481231L}; // 10^(3/4)
    for (std::uint64_t j = 4;; ++j) {
        std::uint64_t ip = 1;
        for (std::uint64_t i = 0; i < j / 4; ++i) ip *= 10;
        std::uint64_t v = (j % 4 == 0)
            ? ip
            : static_cast<std::uint64_t>(std::ceil(quarter[j % 4] * static_cast<long double>(ip)));
        if (v >= n_max) break;
        cps.push_back(v);
    }
    cps.push_back(n_max);
    return cps;
}

namespace {

void check_schedule(std::uint64_t n_max, const std::vector<std::uint64_t>& cps) {
    if (cps.empty() || cps.back() != n_max)
        throw std::invalid_argument("checkpoint schedule must end at n_max");
    for (std::size_t i = 0; i < cps.size(); ++i) {
        if (cps[i] < 1 || (i > 0 && cps[i] <= cps[i - 1]))
            throw std::invalid_argument("checkpoints must be strictly increasing and positive");
    }
}

} // namespace

MeanSeries mean_series(const ChiFunction& chi, std::uint64_t n_max,
                       const std::vector<std::uint64_t>& checkpoints,
                       const MeanOptions& opts) {
    if (n_max < 1) throw std::domain_error("n_max must be positive");
    if (n_max > chi.table().limit()) throw std::out_of_range("n_max beyond table limit");
    check_schedule(n_max, checkpoints);

    const PrimeTable& T = chi.table();
    MeanSeries out;
    out.chi = chi.describe();
    out.checkpoints.reserve(checkpoints.size());

    ComplexSum sum;
    std::size_t next_cp = 0;
    auto snapshot = [&](std::uint64_t n) {
        while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
            std::complex<double> mean = sum.value() / static_cast<double>(n);
            out.checkpoints.push_back({n, mean, std::abs(mean)});
            ++next_cp;
        }
    };

    bool memoize = n_max <= opts.memo_threshold;
    if (memoize) {
        // chi(m) = chi(spf(m)) * chi(m / spf(m)); both factors are already in
        // the memo when m comes up, so every value costs one rotation product.
        std::vector<UnitRotation> memo(n_max + 1);
        memo[1] = UnitRotation::one();
        sum.add({1.0, 0.0});
        snapshot(1);
        for (std::uint64_t m = 2; m <= n_max; ++m) {
            std::uint64_t p = T.spf(m);
            memo[m] = (p == m) ? chi.prime_value(m) : rot_mul(memo[p], memo[m / p]);
            sum.add(to_complex(memo[m]));
            snapshot(m);
        }
    } else {
        sum.add({1.0, 0.0});
        snapshot(1);
        for (std::uint64_t m = 2; m <= n_max; ++m) {
            sum.add(to_complex(chi.value_at(m)));
            snapshot(m);
        }
    }
    return out;
}

std::complex<double> naive_mean(const ChiFunction& chi, std::uint64_t n) {
    if (n < 1) throw std::domain_error("n must be positive");
    if (n > chi.table().limit()) throw std::out_of_range("n beyond table limit");

    long double re = 1.0L, im = 0.0L; // m = 1 contributes chi(1) = 1
    for (std::uint64_t m = 2; m <= n; ++m) {
        UnitRotation v = UnitRotation::one();
        std::uint64_t rest = m;
        for (std::uint64_t d = 2; d * d <= rest; ++d) {
            if (rest % d) continue;
            std::uint64_t e = 0;
            while (rest % d == 0) { rest /= d; ++e; }
            v = rot_mul(v, rot_pow(chi.prime_value(d), e));
        }
        if (rest > 1) v = rot_mul(v, chi.prime_value(rest));
        std::complex<double> z = to_complex(v);
        re += z.real();
        im += z.imag();
    }
    return {static_cast<double>(re / n), static_cast<double>(im / n)};
}

} // namespace horomean
