#pragma once
// Exact arithmetic on roots of unity plus an absorbing zero.
//
// A UnitRotation is either Zero or the point e^{2*pi*i*a/d} stored as the
// reduced fraction a/d with 0 <= a < d and gcd(a,d) = 1. Multiplication adds
// angles mod 1 and stays exact; the only rounding anywhere is the final
// projection to std::complex<double>.

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace horomean {

class UnitRotation {
public:
    // Default-constructed value is the identity rotation 0/1 (= 1).
    constexpr UnitRotation() : a_(0), d_(1) {}

    static constexpr UnitRotation one() { return UnitRotation(); }

    static constexpr UnitRotation zero() {
        UnitRotation r;
        r.d_ = 0;
        return r;
    }

    // e^{2*pi*i*a/d}, normalized. d = 0 is reserved for Zero and rejected here.
    static UnitRotation rot(std::uint64_t a, std::uint64_t d) {
        if (d == 0) throw std::invalid_argument("rotation denominator must be positive");
        a %= d;
        std::uint64_t g = std::gcd(a, d);
        UnitRotation r;
        r.a_ = a / g;
        r.d_ = d / g;
        return r;
    }

    constexpr bool is_zero() const { return d_ == 0; }
    constexpr std::uint64_t num() const { return a_; }
    constexpr std::uint64_t den() const { return d_; }

    std::string str() const {
        if (is_zero()) return "0";
        return std::to_string(a_) + "/" + std::to_string(d_);
    }

    friend constexpr bool operator==(const UnitRotation&, const UnitRotation&) = default;

private:
    std::uint64_t a_;
    std::uint64_t d_; // 0 marks the absorbing Zero
};

// Angle addition mod 1. Zero absorbs. Intermediates go through __int128 so
// any machine-word rotations multiply without overflow; the reduced result
// must fit back into 64 bits.
inline UnitRotation rot_mul(const UnitRotation& x, const UnitRotation& y) {
    if (x.is_zero() || y.is_zero()) return UnitRotation::zero();
    std::uint64_t d1 = x.den(), d2 = y.den();
    std::uint64_t g = std::gcd(d1, d2);
    unsigned __int128 L = static_cast<unsigned __int128>(d1 / g) * d2;
    if (L > ~static_cast<std::uint64_t>(0))
        throw std::overflow_error("rotation denominator exceeds 64 bits");
    std::uint64_t lcm = static_cast<std::uint64_t>(L);
    unsigned __int128 n = static_cast<unsigned __int128>(x.num()) * (lcm / d1) +
                          static_cast<unsigned __int128>(y.num()) * (lcm / d2);
    return UnitRotation::rot(static_cast<std::uint64_t>(n % lcm), lcm);
}

// k-th power; the exponent reduces mod d first so huge k is cheap.
// Zero^k = Zero for k >= 1; Zero^0 has no value and is a domain error.
inline UnitRotation rot_pow(const UnitRotation& x, std::uint64_t k) {
    if (x.is_zero()) {
        if (k == 0) throw std::domain_error("zero rotation raised to power 0");
        return UnitRotation::zero();
    }
    std::uint64_t d = x.den();
    k %= d;
    unsigned __int128 n = static_cast<unsigned __int128>(x.num()) * k;
    return UnitRotation::rot(static_cast<std::uint64_t>(n % d), d);
}

// Projection to the complex unit circle. The fourth roots of unity come out
// exact without touching libm; everything else evaluates the angle in long
// double before rounding to double.
inline std::complex<double> to_complex(const UnitRotation& x) {
    if (x.is_zero()) return {0.0, 0.0};
    std::uint64_t a = x.num(), d = x.den();
    if (d == 1) return {1.0, 0.0};
    if (d == 2) return {-1.0, 0.0};
    if (d == 4) return a == 1 ? std::complex<double>{0.0, 1.0}
                              : std::complex<double>{0.0, -1.0};
    constexpr long double two_pi = 6.283185307179586476925286766559005768L;
    long double th = two_pi * static_cast<long double>(a) / static_cast<long double>(d);
    return {static_cast<double>(std::cos(th)), static_cast<double>(std::sin(th))};
}

} // namespace horomean
