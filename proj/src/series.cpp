#include "horomean/series.hpp"
#include "horomean/summation.hpp"

#include <algorithm>
#include <cmath>

namespace horomean {

namespace {

// Fixed block width for parallel reductions. Partial results are combined in
// ascending block order on one thread, which pins the floating-point result
// independently of the thread count.
constexpr std::size_t kPrimeBlock = 4096;
constexpr std::uint64_t kTermBlock = 1 << 16;

void require_s(double s) {
    if (!(s > 1.0)) throw std::domain_error("series cutoff arguments need s > 1");
}

std::size_t primes_up_to(const std::vector<std::uint64_t>& primes, std::uint64_t X) {
    return static_cast<std::size_t>(
        std::upper_bound(primes.begin(), primes.end(), X) - primes.begin());
}

} // namespace

std::complex<double> euler_product(const ChiFunction& chi, double s, std::uint64_t X) {
    require_s(s);
    const PrimeTable& T = chi.table();
    if (X > T.limit()) throw std::out_of_range("cutoff beyond table limit");
    if (X < 2) return {1.0, 0.0};

    const auto& primes = T.primes();
    const std::size_t np = primes_up_to(primes, X);
    const std::size_t nblocks = (np + kPrimeBlock - 1) / kPrimeBlock;

    std::vector<std::complex<double>> partial(nblocks, {1.0, 0.0});
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        std::complex<double> prod{1.0, 0.0};
        std::size_t lo = static_cast<std::size_t>(b) * kPrimeBlock;
        std::size_t hi = std::min(lo + kPrimeBlock, np);
        for (std::size_t i = lo; i < hi; ++i) {
            UnitRotation v = chi.prime_value(primes[i]);
            if (v.is_zero()) continue; // unit factor
            double ps = std::pow(static_cast<double>(primes[i]), -s);
            prod *= 1.0 / (1.0 - to_complex(v) * ps);
        }
        partial[b] = prod;
    }

    std::complex<double> out{1.0, 0.0};
    for (const auto& f : partial) out *= f;
    return out;
}

std::complex<double> euler_product_serial(const ChiFunction& chi, double s, std::uint64_t X) {
    require_s(s);
    const PrimeTable& T = chi.table();
    if (X > T.limit()) throw std::out_of_range("cutoff beyond table limit");
    std::complex<double> out{1.0, 0.0};
    for (std::uint64_t p : T.primes()) {
        if (p > X) break;
        UnitRotation v = chi.prime_value(p);
        if (v.is_zero()) continue;
        out *= 1.0 / (1.0 - to_complex(v) * std::pow(static_cast<double>(p), -s));
    }
    return out;
}

std::complex<double> dirichlet_sum(const ChiFunction& chi, double s, std::uint64_t M) {
    require_s(s);
    const PrimeTable& T = chi.table();
    if (M < 1) throw std::domain_error("dirichlet cutoff must be positive");
    if (M > T.limit()) throw std::out_of_range("cutoff beyond table limit");

    const std::uint64_t nblocks = (M + kTermBlock - 1) / kTermBlock;
    std::vector<ComplexSum> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        ComplexSum sum;
        std::uint64_t lo = static_cast<std::uint64_t>(b) * kTermBlock + 1;
        std::uint64_t hi = std::min(lo + kTermBlock - 1, M);
        for (std::uint64_t m = lo; m <= hi; ++m) {
            UnitRotation v = chi.value_at(m);
            if (v.is_zero()) continue;
            sum.add(to_complex(v) * std::pow(static_cast<double>(m), -s));
        }
        partial[b] = sum;
    }

    ComplexSum total;
    for (const auto& p : partial) total.merge(p);
    return total.value();
}

std::complex<double> dirichlet_sum_serial(const ChiFunction& chi, double s, std::uint64_t M) {
    require_s(s);
    if (M < 1) throw std::domain_error("dirichlet cutoff must be positive");
    if (M > chi.table().limit()) throw std::out_of_range("cutoff beyond table limit");
    ComplexSum sum;
    for (std::uint64_t m = 1; m <= M; ++m) {
        UnitRotation v = chi.value_at(m);
        if (v.is_zero()) continue;
        sum.add(to_complex(v) * std::pow(static_cast<double>(m), -s));
    }
    return sum.value();
}

SeriesEval evaluate_series(const ChiFunction& chi, double s, std::uint64_t cutoff) {
    return {s, cutoff, euler_product(chi, s, cutoff), dirichlet_sum(chi, s, cutoff)};
}

DelangeDiag delange_diag(const ChiFunction& chi, const std::vector<std::uint64_t>& checkpoints) {
    if (checkpoints.empty()) throw std::invalid_argument("need at least one checkpoint");
    for (std::size_t i = 0; i < checkpoints.size(); ++i)
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly increasing");
    const PrimeTable& T = chi.table();
    const std::uint64_t X = checkpoints.back();
    if (X > T.limit()) throw std::out_of_range("checkpoint beyond table limit");

    DelangeDiag out;
    out.partial_sums.reserve(checkpoints.size());

    // The partial sums are cumulative cuts of one ordered series, so this
    // pass stays sequential.
    ComplexSum sum;
    const auto& primes = T.primes();
    std::size_t i = 0;
    for (std::uint64_t cp : checkpoints) {
        for (; i < primes.size() && primes[i] <= cp; ++i) {
            UnitRotation v = chi.prime_value(primes[i]);
            if (v == UnitRotation::one()) continue; // term is exactly 0
            std::complex<double> z = to_complex(v);
            sum.add((1.0 - z) / static_cast<double>(primes[i]));
        }
        out.partial_sums.emplace_back(cp, sum.value());
    }

    std::complex<double> prod{1.0, 0.0};
    for (std::size_t j = 0; j < primes.size() && primes[j] <= X; ++j) {
        UnitRotation v = chi.prime_value(primes[j]);
        if (v == UnitRotation::one()) continue; // factor is exactly 1
        double ip = 1.0 / static_cast<double>(primes[j]);
        prod *= (1.0 - ip) / (1.0 - to_complex(v) * ip);
    }
    out.product_prediction = prod;
    return out;
}

std::vector<std::pair<double, std::complex<double>>>
residue_probe(const ChiFunction& chi, const std::vector<double>& s_grid, std::uint64_t X) {
    if (s_grid.empty()) throw std::invalid_argument("empty s grid");
    std::vector<std::pair<double, std::complex<double>>> out;
    out.reserve(s_grid.size());
    for (double s : s_grid) {
        require_s(s); // delta = s - 1 must be positive
        out.emplace_back(s, (s - 1.0) * euler_product(chi, s, X));
    }
    return out;
}

namespace {

struct Eq2Partial {
    NeumaierSum lhs, rhs, k2;
};

// Per-prime contributions for a prime with quotient t (psit(p) = -1), with
// x = p^-s:
//   lhs: 2x
//   rhs: log(1+x) - log(1-x)
//   k2:  2 * sum_{odd k >= 3} x^k / k, cut off at a 1e-18 relative step.
// Primes with psit(p) = +1 contribute exactly zero to all three.
void eq2_accumulate(Eq2Partial& acc, double x) {
    acc.lhs.add(2.0 * x);
    acc.rhs.add(std::log1p(x) - std::log1p(-x));
    double xk = x * x * x;
    double x2 = x * x;
    double local = 0.0;
    for (std::uint64_t k = 3;; k += 2) {
        double term = 2.0 * xk / static_cast<double>(k);
        local += term;
        xk *= x2;
        if (term < 1e-18 * local) break;
    }
    acc.k2.add(local);
}

void eq2_validate(const PrimeTable& T, std::uint64_t t, double s, std::uint64_t X) {
    require_s(s);
    if (t < 1) throw std::domain_error("quotient t must be >= 1");
    if (X < 2) throw std::domain_error("cutoff must be at least 2");
    if (X > T.limit()) throw std::out_of_range("cutoff beyond table limit");
}

} // namespace

Eq2Result eq2_identity_check(const PrimeTable& T, std::uint64_t t, double s, std::uint64_t X) {
    eq2_validate(T, t, s, X);

    const auto& primes = T.primes();
    const std::size_t np = primes_up_to(primes, X);
    const std::size_t nblocks = (np + kPrimeBlock - 1) / kPrimeBlock;

    std::vector<Eq2Partial> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        Eq2Partial acc;
        std::size_t lo = static_cast<std::size_t>(b) * kPrimeBlock;
        std::size_t hi = std::min(lo + kPrimeBlock, np);
        for (std::size_t i = lo; i < hi; ++i) {
            std::uint64_t p = primes[i];
            if (p == T.q()) continue; // psit(q) = +1 by convention
            if (T.quotient_of(p) != t) continue;
            eq2_accumulate(acc, std::pow(static_cast<double>(p), -s));
        }
        partial[b] = acc;
    }

    Eq2Partial total;
    for (const auto& a : partial) {
        total.lhs.merge(a.lhs);
        total.rhs.merge(a.rhs);
        total.k2.merge(a.k2);
    }
    return {total.lhs.value(), total.rhs.value(), total.k2.value()};
}

Eq2Result eq2_identity_check_serial(const PrimeTable& T, std::uint64_t t, double s,
                                    std::uint64_t X) {
    eq2_validate(T, t, s, X);

    // log zeta_X and log C_X assembled as independent full sums over every
    // prime <= X, subtracted only at the end.
    NeumaierSum log_zeta, log_c, lhs, k2;
    for (std::uint64_t p : T.primes()) {
        if (p > X) break;
        double x = std::pow(static_cast<double>(p), -s);
        double sign = 1.0; // psit(p)
        if (p != T.q() && T.quotient_of(p) == t) sign = -1.0;
        log_zeta.add(-std::log1p(-x));
        log_c.add(-std::log1p(-sign * x));
        if (sign < 0.0) {
            lhs.add(2.0 * x);
            double xk = x * x * x, x2 = x * x, local = 0.0;
            for (std::uint64_t k = 3;; k += 2) {
                double term = 2.0 * xk / static_cast<double>(k);
                local += term;
                xk *= x2;
                if (term < 1e-18 * local) break;
            }
            k2.add(local);
        }
    }
    return {lhs.value(), log_zeta.value() - log_c.value(), k2.value()};
}

DensityResult artin_density(const PrimeTable& T, std::uint64_t t, std::uint64_t x) {
    if (t < 1) throw std::domain_error("quotient t must be >= 1");
    if (x < 2) throw std::domain_error("census limit must be at least 2");
    if (x > T.limit()) throw std::out_of_range("census limit beyond table limit");

    const auto& recs = T.records();
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(recs.size()); ++i) {
        if (recs[i].p <= x && recs[i].t == t) ++count;
    }
    std::uint64_t pi_x = T.pi(x);
    return {count, pi_x, static_cast<double>(count) / static_cast<double>(pi_x)};
}

double artin_constant(std::uint64_t X) {
    if (X < 2) throw std::domain_error("cutoff must be at least 2");
    std::vector<std::uint64_t> primes = sieve_primes(X);
    const std::size_t nblocks = (primes.size() + kPrimeBlock - 1) / kPrimeBlock;

    std::vector<double> partial(nblocks, 1.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        double prod = 1.0;
        std::size_t lo = static_cast<std::size_t>(b) * kPrimeBlock;
        std::size_t hi = std::min(lo + kPrimeBlock, primes.size());
        for (std::size_t i = lo; i < hi; ++i) {
            double p = static_cast<double>(primes[i]);
            prod *= 1.0 - 1.0 / (p * (p - 1.0));
        }
        partial[b] = prod;
    }

    double out = 1.0;
    for (double f : partial) out *= f;
    return out;
}

double artin_constant_serial(std::uint64_t X) {
    if (X < 2) throw std::domain_error("cutoff must be at least 2");
    double out = 1.0;
    for (std::uint64_t pu : sieve_primes(X)) {
        double p = static_cast<double>(pu);
        out *= 1.0 - 1.0 / (p * (p - 1.0));
    }
    return out;
}

} // namespace horomean
