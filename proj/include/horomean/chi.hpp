#pragma once
// The completely multiplicative functions built from order data. Each one is
// fixed by its values at primes and extended by chi(m*n) = chi(m)*chi(n):
//
//   chi0:   p -> e^{2 pi i / p}
//   psi:    p -> e^{2 pi i / t_q(p)}     (= e^{2 pi i f_q(p)/(p-1)}),  psi(q) = 0
//   varpi:  p -> e^{2 pi i / f_q(p)},                                varpi(q) = 0
//   psit:   p -> -1 if t_q(p) = t else +1,                            psit(q) = +1
//   psipow: p -> psi(p)^k for fixed k >= 1
//   const:  p -> r for a fixed rotation r (test fixture)
//
// The p = q conventions above are design choices, surfaced by the CLI as
// output metadata.

#include "horomean/prime_table.hpp"
#include "horomean/rotation.hpp"

#include <cstdint>
#include <string>

namespace horomean {

enum class ChiKind { chi0, psi, varpi, psit, psipow, constant };

class ChiFunction {
public:
    static ChiFunction chi0(const PrimeTable& t) { return {&t, ChiKind::chi0, 0, 0, {}}; }
    static ChiFunction psi(const PrimeTable& t) { return {&t, ChiKind::psi, 0, 0, {}}; }
    static ChiFunction varpi(const PrimeTable& t) { return {&t, ChiKind::varpi, 0, 0, {}}; }

    static ChiFunction psit(const PrimeTable& t, std::uint64_t tparam) {
        if (tparam < 1) throw std::invalid_argument("psit parameter t must be >= 1");
        return {&t, ChiKind::psit, tparam, 0, {}};
    }

    // k = 0 would need 0^0 at p = q under the psi(q) = 0 convention, so only
    // k >= 1 is accepted.
    static ChiFunction psipow(const PrimeTable& t, std::uint64_t k) {
        if (k < 1) throw std::invalid_argument("psipow exponent k must be >= 1");
        return {&t, ChiKind::psipow, 0, k, {}};
    }

    static ChiFunction constant(const PrimeTable& t, UnitRotation r) {
        return {&t, ChiKind::constant, 0, 0, r};
    }

    // Value at a prime p <= limit.
    UnitRotation prime_value(std::uint64_t p) const;

    // Value at any 1 <= m <= limit via the smallest-prime-factor chain.
    UnitRotation value_at(std::uint64_t m) const;

    ChiKind kind() const { return kind_; }
    std::uint64_t q() const { return table_->q(); }
    std::uint64_t t_param() const { return t_; }
    std::uint64_t k_param() const { return k_; }
    const PrimeTable& table() const { return *table_; }

    // Short display form, e.g. "psi(q=2)" or "psit(q=2,t=1)".
    std::string describe() const;

private:
    ChiFunction(const PrimeTable* t, ChiKind kind, std::uint64_t tp, std::uint64_t k,
                UnitRotation r)
        : table_(t), kind_(kind), t_(tp), k_(k), const_(r) {}

    const PrimeTable* table_;
    ChiKind kind_;
    std::uint64_t t_;
    std::uint64_t k_;
    UnitRotation const_;
};

} // namespace horomean
