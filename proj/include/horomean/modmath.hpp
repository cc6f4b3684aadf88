#pragma once
// Small modular-arithmetic helpers shared by the order computations and the
// divisor scans. Everything works on 64-bit words; products go through
// unsigned __int128 so no modulus below 2^64 can overflow.

#include <cstdint>
#include <utility>
#include <vector>

namespace horomean {

using u64 = std::uint64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic trial-division primality test. Fine for the sizes the CLI
// accepts as bases; the sieve handles bulk ranges.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

// Factorization by trial division, (prime, exponent) pairs in ascending order.
inline std::vector<std::pair<u64, int>> trial_factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace horomean
