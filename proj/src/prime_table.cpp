#include "horomean/prime_table.hpp"
#include "horomean/modmath.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <zlib.h>

namespace horomean {

std::vector<u64> sieve_primes(u64 x) {
    if (x < 2) throw std::domain_error("sieve limit must be at least 2");
    std::vector<std::uint8_t> composite(x + 1, 0);
    std::vector<u64> primes;
    for (u64 i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= x; j += i) composite[j] = 1;
    }
    return primes;
}

namespace {

// Core of the order computation: start at f = p-1 and strip each prime
// factor of p-1 for as long as q^(f/l) stays = 1 mod p. The survivor is the
// least exponent, so no search over divisors is needed.
u64 order_from_factors(u64 q, u64 p, const std::vector<std::pair<u64, int>>& factors) {
    u64 f = p - 1;
    for (auto [l, e] : factors) {
        for (int i = 0; i < e; ++i) {
            if (f % l == 0 && pow_mod(q, f / l, p) == 1)
                f /= l;
            else
                break;
        }
    }
    return f;
}

// Distinct-prime factorization of n through a smallest-prime-factor array.
std::vector<std::pair<u64, int>> spf_factorize(u64 n, const std::vector<std::uint32_t>& spf) {
    std::vector<std::pair<u64, int>> out;
    while (n > 1) {
        u64 l = spf[n];
        int e = 0;
        while (n % l == 0) { n /= l; ++e; }
        out.emplace_back(l, e);
    }
    return out;
}

std::vector<std::uint32_t> build_spf(u64 x) {
    std::vector<std::uint32_t> spf(x + 1, 0);
    for (u64 i = 2; i <= x; ++i) {
        if (spf[i] != 0) continue;
        spf[i] = static_cast<std::uint32_t>(i);
        for (u64 j = i * i; j <= x; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

} // namespace

u64 multiplicative_order(u64 q, u64 p) {
    if (p == q) throw std::domain_error("order of q mod q is undefined");
    if (!is_prime_u64(p)) throw std::domain_error("modulus must be prime");
    if (!is_prime_u64(q)) throw std::domain_error("base must be prime");
    return order_from_factors(q, p, trial_factorize(p - 1));
}

PrimeTable PrimeTable::build_impl(u64 q, u64 x, bool parallel) {
    if (x < 2) throw std::domain_error("table limit must be at least 2");
    if (x > 0xFFFFFFFFull) throw std::domain_error("table limit exceeds 32-bit sieve range");
    if (!is_prime_u64(q)) throw std::domain_error("base q must be prime");

    PrimeTable table;
    table.q_ = q;
    table.limit_ = x;
    table.rebuild_derived();

    const auto& primes = table.primes_;
    std::vector<PrimeRecord> recs(primes.size());

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(primes.size()); ++i) {
            u64 p = primes[i];
            if (p == q) { recs[i] = {p, 0, 0}; continue; }
            u64 f = order_from_factors(q, p, spf_factorize(p - 1, table.spf_));
            recs[i] = {p, f, (p - 1) / f};
        }
    } else {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            u64 p = primes[i];
            if (p == q) { recs[i] = {p, 0, 0}; continue; }
            u64 f = order_from_factors(q, p, trial_factorize(p - 1));
            recs[i] = {p, f, (p - 1) / f};
        }
    }

    table.records_.reserve(primes.size());
    for (const auto& r : recs)
        if (r.p != q) table.records_.push_back(r);
    return table;
}

PrimeTable PrimeTable::build(u64 q, u64 x) { return build_impl(q, x, true); }
PrimeTable PrimeTable::build_serial(u64 q, u64 x) { return build_impl(q, x, false); }

void PrimeTable::rebuild_derived() {
    spf_ = build_spf(limit_);
    primes_.clear();
    for (u64 m = 2; m <= limit_; ++m)
        if (spf_[m] == m) primes_.push_back(m);
}

const PrimeRecord* PrimeTable::find_record(u64 p) const {
    auto it = std::lower_bound(records_.begin(), records_.end(), p,
                               [](const PrimeRecord& r, u64 v) { return r.p < v; });
    if (it == records_.end() || it->p != p) return nullptr;
    return &*it;
}

u64 PrimeTable::order_of(u64 p) const {
    const PrimeRecord* r = find_record(p);
    if (!r) throw std::out_of_range("no order record for this prime");
    return r->f;
}

u64 PrimeTable::quotient_of(u64 p) const {
    const PrimeRecord* r = find_record(p);
    if (!r) throw std::out_of_range("no order record for this prime");
    return r->t;
}

u64 PrimeTable::pi(u64 x) const {
    if (x > limit_) throw std::out_of_range("pi argument beyond table limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<u64>(it - primes_.begin());
}

// ---- disk format ----------------------------------------------------------
//
//   horomean-ptable v1
//   q=<q> x=<x> count=<n>
//   p,f,t            (count lines, ascending p)
//   crc32=<8 hex digits over the record lines, newlines included>

namespace {
constexpr const char* kMagic = "horomean-ptable";
constexpr const char* kVersion = "v1";
} // namespace

void PrimeTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open table file for writing: " + path);

    out << kMagic << ' ' << kVersion << '\n';
    out << "q=" << q_ << " x=" << limit_ << " count=" << records_.size() << '\n';

    uLong crc = crc32(0L, Z_NULL, 0);
    char line[96];
    for (const auto& r : records_) {
        int len = std::snprintf(line, sizeof line, "%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n",
                                r.p, r.f, r.t);
        crc = crc32(crc, reinterpret_cast<const Bytef*>(line), static_cast<uInt>(len));
        out.write(line, len);
    }
    char tail[32];
    std::snprintf(tail, sizeof tail, "crc32=%08lx\n", static_cast<unsigned long>(crc));
    out << tail;
    out.flush();
    if (!out) throw std::runtime_error("write failure on table file: " + path);
}

PrimeTable PrimeTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw load_error(load_error::reason::io, "cannot open table file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw load_error(load_error::reason::malformed, "empty table file");
    {
        std::istringstream hdr(line);
        std::string magic, version;
        hdr >> magic >> version;
        if (magic != kMagic)
            throw load_error(load_error::reason::malformed, "not a prime table file");
        if (version != kVersion)
            throw load_error(load_error::reason::version,
                             "unsupported table version: " + version);
    }

    u64 q = 0, x = 0, count = 0;
    if (!std::getline(in, line) ||
        std::sscanf(line.c_str(), "q=%" SCNu64 " x=%" SCNu64 " count=%" SCNu64,
                    &q, &x, &count) != 3)
        throw load_error(load_error::reason::malformed, "bad table header line");
    if (x < 2 || x > 0xFFFFFFFFull || !is_prime_u64(q))
        throw load_error(load_error::reason::malformed, "implausible table header values");

    std::vector<PrimeRecord> recs;
    recs.reserve(count);
    uLong crc = crc32(0L, Z_NULL, 0);
    for (u64 i = 0; i < count; ++i) {
        if (!std::getline(in, line))
            throw load_error(load_error::reason::malformed, "truncated record block");
        PrimeRecord r{};
        if (std::sscanf(line.c_str(), "%" SCNu64 ",%" SCNu64 ",%" SCNu64,
                        &r.p, &r.f, &r.t) != 3)
            throw load_error(load_error::reason::malformed, "bad record line");
        std::string raw = line + '\n';
        crc = crc32(crc, reinterpret_cast<const Bytef*>(raw.data()),
                    static_cast<uInt>(raw.size()));
        recs.push_back(r);
    }

    unsigned long stored = 0;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "crc32=%lx", &stored) != 1)
        throw load_error(load_error::reason::malformed, "missing checksum line");
    if (stored != static_cast<unsigned long>(crc))
        throw load_error(load_error::reason::checksum, "table checksum mismatch");

    PrimeTable table;
    table.q_ = q;
    table.limit_ = x;
    table.records_ = std::move(recs);
    table.rebuild_derived();

    // Structural sanity against the re-sieved primes: the record set must be
    // exactly the primes <= x minus q, in order, with t*f = p-1.
    std::size_t want = table.primes_.size() - (q <= x ? 1 : 0);
    if (table.records_.size() != want)
        throw load_error(load_error::reason::malformed, "record count disagrees with sieve");
    std::size_t j = 0;
    for (u64 p : table.primes_) {
        if (p == q) continue;
        const PrimeRecord& r = table.records_[j++];
        if (r.p != p || r.f == 0 || r.f * r.t != p - 1)
            throw load_error(load_error::reason::malformed, "record block fails invariants");
    }
    return table;
}

} // namespace horomean
