#pragma once
// Dual evaluation of C(s, chi) = sum_m chi(m)/m^s = prod_p (1 - chi(p)p^-s)^-1
// for Re(s) > 1, plus the diagnostics built on top of it: mean-value
// convergence tests, a residue probe near s = 1, the prime-sum identity for
// the t-density, and Artin-style densities against the classical constant.
//
// Floating-point reductions run over fixed-size blocks of primes combined in
// ascending order, so results are bit-identical no matter how many threads
// execute the blocks. Each kernel keeps a plain serial twin for testing.

#include "horomean/chi.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace horomean {

// Truncated Euler product over primes p <= X. chi(p) = 0 contributes a unit
// factor. Requires s > 1; X < 2 yields the empty product 1.
std::complex<double> euler_product(const ChiFunction& chi, double s, std::uint64_t X);
std::complex<double> euler_product_serial(const ChiFunction& chi, double s, std::uint64_t X);

// Truncated Dirichlet sum over 1 <= m <= M with compensated summation.
std::complex<double> dirichlet_sum(const ChiFunction& chi, double s, std::uint64_t M);
std::complex<double> dirichlet_sum_serial(const ChiFunction& chi, double s, std::uint64_t M);

struct SeriesEval {
    double s;
    std::uint64_t cutoff;
    std::complex<double> euler;
    std::complex<double> dirichlet;
};

SeriesEval evaluate_series(const ChiFunction& chi, double s, std::uint64_t cutoff);

// Convergence diagnostics for the mean-value criterion: partial sums of
// sum_p (1 - chi(p))/p at each checkpoint, and the product
// prod_{p<=X} (1 - 1/p)/(1 - chi(p)/p) at the largest checkpoint. Primes
// where chi(p) is exactly 1 cancel factor-for-factor and are skipped, so the
// constant-one fixture returns partial sums 0 and product exactly 1.
struct DelangeDiag {
    std::vector<std::pair<std::uint64_t, std::complex<double>>> partial_sums;
    std::complex<double> product_prediction;
};

DelangeDiag delange_diag(const ChiFunction& chi, const std::vector<std::uint64_t>& checkpoints);

// Rows (s, (s-1) * C_X(s, chi)) for a grid of s = 1 + delta, delta > 0.
std::vector<std::pair<double, std::complex<double>>>
residue_probe(const ChiFunction& chi, const std::vector<double>& s_grid, std::uint64_t X);

// Finite check of the identity
//   2 * sum_{p<=X, t_q(p)=t} p^-s  =  log zeta_X(s) - log C_X(s, psit)
//                                     - sum_{p<=X} sum_{k>=2} (1-psit(p)^k)/(k p^{ks})
// with both logs taken as sums of per-factor principal logs over the same
// primes. residual() is the float-level defect and should sit near 1e-15.
struct Eq2Result {
    double lhs;
    double rhs;
    double k2_tail;
    double residual() const { return rhs - lhs - k2_tail; }
};

Eq2Result eq2_identity_check(const PrimeTable& table, std::uint64_t t, double s,
                             std::uint64_t X);
// Reference route: assembles the two log sums independently over all primes
// and subtracts at the end.
Eq2Result eq2_identity_check_serial(const PrimeTable& table, std::uint64_t t, double s,
                                    std::uint64_t X);

// Share of primes p <= x (p != q) whose quotient t_q(p) equals t, against
// pi(x) with q counted.
struct DensityResult {
    std::uint64_t count;
    std::uint64_t pi_x;
    double density;
};

DensityResult artin_density(const PrimeTable& table, std::uint64_t t, std::uint64_t x);

// prod_{p<=X} (1 - 1/(p(p-1))), the classical density constant; needs no
// order data, so it sieves its own primes.
double artin_constant(std::uint64_t X);
double artin_constant_serial(std::uint64_t X);

} // namespace horomean
