#include "horomean/census.hpp"
#include "horomean/modmath.hpp"

#include <cmath>
#include <numeric>

namespace horomean {

namespace {

void check_census_range(const PrimeTable& T, std::uint64_t x) {
    if (x < 2) throw std::domain_error("census limit must be at least 2");
    if (x > T.limit()) throw std::out_of_range("census limit beyond table limit");
}

} // namespace

CensusResult sk_census(const PrimeTable& T, std::uint64_t k, std::uint64_t x) {
    if (k < 1) throw std::domain_error("census exponent k must be >= 1");
    check_census_range(T, x);
    CensusResult out{};
    for (const auto& r : T.records()) {
        if (r.p > x) break;
        bool flag = (k % r.t) != 0;
        out.rows.push_back({r.p, r.f, r.t, flag});
        if (flag) ++out.count;
    }
    return out;
}

CensusResult large_order_census(const PrimeTable& T, std::uint64_t x) {
    check_census_range(T, x);
    CensusResult out{};
    for (const auto& r : T.records()) {
        if (r.p > x) break;
        double threshold = static_cast<double>(r.p - 1) / std::log(static_cast<double>(r.p));
        bool flag = static_cast<double>(r.f) > threshold;
        out.rows.push_back({r.p, r.f, r.t, flag});
        if (flag) ++out.count;
    }
    return out;
}

namespace {

// Order of q modulo p^e: start from the order mod p and multiply by p once
// per power step where the congruence fails to lift.
u64 order_mod_prime_power(const PrimeTable& T, u64 p, int e) {
    u64 f = T.order_of(p);
    u64 pe = p;
    for (int j = 2; j <= e; ++j) {
        pe *= p;
        if (pow_mod(T.q() % pe, f, pe) != 1) f *= p;
    }
    if (pow_mod(T.q() % pe, f, pe) != 1)
        throw consistency_error("order lift failed at p^" + std::to_string(e));
    return f;
}

} // namespace

u64 iq_count(const PrimeTable& T, u64 m) {
    if (m < 1 || m > T.limit()) throw std::out_of_range("m outside [1, limit]");
    if (std::gcd(m, T.q()) != 1) throw std::domain_error("m must be coprime to q");

    // Factor m once, then walk all divisors d = prod p_i^{c_i} keeping, per
    // prime power, its phi and the order of q. For each divisor,
    // f_q(d) = lcm of the per-prime-power orders and phi is multiplicative.
    std::vector<std::pair<u64, int>> fac;
    {
        u64 rest = m;
        while (rest > 1) {
            u64 p = T.spf(rest);
            int e = 0;
            while (rest % p == 0) { rest /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }

    struct PartProps {
        u64 phi;
        u64 ord;
    };
    // props[i][c] for p_i^c, c = 0..e_i
    std::vector<std::vector<PartProps>> props(fac.size());
    for (std::size_t i = 0; i < fac.size(); ++i) {
        auto [p, e] = fac[i];
        props[i].resize(e + 1);
        props[i][0] = {1, 1};
        u64 pc = 1;
        for (int c = 1; c <= e; ++c) {
            pc *= p;
            props[i][c] = {pc - pc / p, order_mod_prime_power(T, p, c)};
        }
    }

    u64 total = 0;
    std::vector<int> expo(fac.size(), 0);
    while (true) {
        u64 phi = 1, ord = 1;
        for (std::size_t i = 0; i < fac.size(); ++i) {
            phi *= props[i][expo[i]].phi;
            ord = std::lcm(ord, props[i][expo[i]].ord);
        }
        if (phi % ord != 0)
            throw consistency_error("phi(d) not divisible by f_q(d); order data corrupt");
        total += phi / ord;

        std::size_t i = 0;
        while (i < fac.size() && expo[i] == fac[i].second) expo[i++] = 0;
        if (i == fac.size()) break;
        ++expo[i];
    }
    return total;
}

u64 cyclotomic_coset_count(u64 q, u64 m) {
    if (m < 1) throw std::domain_error("modulus must be positive");
    if (std::gcd(q, m) != 1) throw std::domain_error("q must be invertible mod m");

    std::vector<std::uint8_t> seen(m, 0);
    u64 count = 0;
    for (u64 a = 0; a < m; ++a) {
        if (seen[a]) continue;
        ++count;
        u64 b = a;
        do {
            seen[b] = 1;
            b = mul_mod(q % m, b, m);
        } while (b != a);
    }
    return count;
}

} // namespace horomean
