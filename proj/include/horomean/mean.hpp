#pragma once
// Running means M_n(chi) = (1/n) * sum_{m<=n} chi(m), reported at a set of
// checkpoints. The accumulation pass is sequential by contract: summation
// order is pinned so results are bit-for-bit reproducible.

#include "horomean/chi.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace horomean {

struct MeanCheckpoint {
    std::uint64_t n;
    std::complex<double> mean;
    double magnitude;
};

struct MeanSeries {
    std::string chi;
    std::vector<MeanCheckpoint> checkpoints;
};

struct MeanOptions {
    // Above this n_max the pass recomputes chi(m) from the spf chain per m
    // instead of memoizing one rotation per integer (memory vs time).
    std::uint64_t memo_threshold = 100'000'000;
};

// Default checkpoint schedule: n = ceil(10^(j/4)) for j = 4, 5, ... capped at
// and always including n_max.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_max);

// One deterministic left-to-right pass with compensated summation.
// checkpoints must be strictly increasing and end at n_max.
MeanSeries mean_series(const ChiFunction& chi, std::uint64_t n_max,
                       const std::vector<std::uint64_t>& checkpoints,
                       const MeanOptions& opts = {});

inline MeanSeries mean_series(const ChiFunction& chi, std::uint64_t n_max,
                              const MeanOptions& opts = {}) {
    return mean_series(chi, n_max, geometric_checkpoints(n_max), opts);
}

// Reference mean: factors every m by trial division, never touching the spf
// sieve, and accumulates in long double. Slow on purpose; used as the oracle.
std::complex<double> naive_mean(const ChiFunction& chi, std::uint64_t n);

} // namespace horomean
