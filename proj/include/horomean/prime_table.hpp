#pragma once
// Prime sieve, multiplicative orders, and the (p, f, t) table everything else
// consumes. For a fixed prime base q and every prime p <= x with p != q the
// table stores
//     f = ord_p(q)   (least f >= 1 with q^f = 1 mod p)
//     t = (p - 1)/f
// plus a smallest-prime-factor array for all m <= x so integers factor in
// O(log m). Tables round-trip through a checksummed text file.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace horomean {

// Ascending primes <= x via sieve of Eratosthenes. x < 2 is a domain error.
std::vector<std::uint64_t> sieve_primes(std::uint64_t x);

// Least f with q^f = 1 mod p, computed by factoring p-1 and dividing out
// prime factors while the congruence still holds. Both arguments must be
// prime and distinct.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t p);

struct PrimeRecord {
    std::uint64_t p;
    std::uint64_t f;
    std::uint64_t t;

    friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

// Raised by PrimeTable::load on a bad file; why() says what was wrong.
class load_error : public std::runtime_error {
public:
    enum class reason { io, malformed, version, checksum };

    load_error(reason r, const std::string& what)
        : std::runtime_error(what), reason_(r) {}

    reason why() const { return reason_; }

private:
    reason reason_;
};

class PrimeTable {
public:
    // Order computation runs one prime per task across threads; every slot is
    // written independently so the result never depends on scheduling.
    static PrimeTable build(std::uint64_t q, std::uint64_t x);

    // Plain loop kept as the reference implementation; factors p-1 by trial
    // division instead of the spf array. Must agree with build() exactly.
    static PrimeTable build_serial(std::uint64_t q, std::uint64_t x);

    // Versioned text format with a crc32 line over the record block.
    // The spf array is not persisted; load re-sieves it from x.
    void save(const std::string& path) const;
    static PrimeTable load(const std::string& path);

    std::uint64_t q() const { return q_; }
    std::uint64_t limit() const { return limit_; }

    // All primes <= limit in ascending order, q included.
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // One record per prime <= limit except q, ascending by p.
    const std::vector<PrimeRecord>& records() const { return records_; }

    // Smallest prime factor of m, 2 <= m <= limit.
    std::uint32_t spf(std::uint64_t m) const {
        if (m < 2 || m > limit_) throw std::out_of_range("spf argument outside [2, limit]");
        return spf_[m];
    }

    bool is_prime(std::uint64_t m) const {
        return m >= 2 && m <= limit_ && spf_[m] == m;
    }

    // Record lookup by prime; null when p is q, composite, or beyond limit.
    const PrimeRecord* find_record(std::uint64_t p) const;

    // f and t by prime, throwing lookups for callers that require a record.
    std::uint64_t order_of(std::uint64_t p) const;
    std::uint64_t quotient_of(std::uint64_t p) const;

    // Number of primes <= x (q counts), x <= limit.
    std::uint64_t pi(std::uint64_t x) const;

    friend bool operator==(const PrimeTable& a, const PrimeTable& b) {
        return a.q_ == b.q_ && a.limit_ == b.limit_ && a.records_ == b.records_;
    }

private:
    PrimeTable() = default;

    static PrimeTable build_impl(std::uint64_t q, std::uint64_t x, bool parallel);
    void rebuild_derived(); // spf + primes from limit_

    std::uint64_t q_ = 0;
    std::uint64_t limit_ = 0;
    std::vector<PrimeRecord> records_;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint32_t> spf_;
};

} // namespace horomean
