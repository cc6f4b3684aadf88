#pragma once
// Prime censuses over the order table plus the factor-count identity for
// x^m - 1 over F_q: the number of distinct irreducible factors equals
//   i_q(m) = sum_{d | m} phi(d) / f_q(d)
// which in turn equals the number of orbits of a -> q*a on Z/mZ. Both sides
// are computed independently and cross-checked.

#include "horomean/prime_table.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace horomean {

// Signals a broken internal identity (e.g. phi(d) not divisible by f_q(d),
// which a correct order computation makes impossible). The CLI maps this to
// exit code 2.
class consistency_error : public std::logic_error {
    using std::logic_error::logic_error;
};

struct CensusRow {
    std::uint64_t p;
    std::uint64_t f;
    std::uint64_t t;
    bool flag;
};

struct CensusResult {
    std::vector<CensusRow> rows; // one per prime p <= x, p != q, ascending
    std::uint64_t count;         // number of flagged rows
};

// Flags primes whose quotient t_q(p) does not divide k.
CensusResult sk_census(const PrimeTable& table, std::uint64_t k, std::uint64_t x);

// Flags primes with f_q(p) > (p-1)/log p (natural log).
CensusResult large_order_census(const PrimeTable& table, std::uint64_t x);

// i_q(m) by the divisor sum above. Needs gcd(m, q) = 1 and m <= limit so
// divisors factor through the table's spf array. f_q(1) = 1 by convention.
std::uint64_t iq_count(const PrimeTable& table, std::uint64_t m);

// Orbit count of a -> q*a mod m on {0, ..., m-1} by direct enumeration.
std::uint64_t cyclotomic_coset_count(std::uint64_t q, std::uint64_t m);

} // namespace horomean
