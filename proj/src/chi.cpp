#include "horomean/chi.hpp"

namespace horomean {

UnitRotation ChiFunction::prime_value(std::uint64_t p) const {
    const PrimeTable& T = *table_;
    if (p > T.limit()) throw std::out_of_range("prime beyond table limit");
    if (!T.is_prime(p)) throw std::invalid_argument("prime_value argument is not prime");

    switch (kind_) {
    case ChiKind::chi0:
        return UnitRotation::rot(1, p);
    case ChiKind::psi:
        if (p == T.q()) return UnitRotation::zero();
        return UnitRotation::rot(1, T.quotient_of(p));
    case ChiKind::varpi:
        if (p == T.q()) return UnitRotation::zero();
        return UnitRotation::rot(1, T.order_of(p));
    case ChiKind::psit:
        if (p == T.q()) return UnitRotation::one();
        return T.quotient_of(p) == t_ ? UnitRotation::rot(1, 2) : UnitRotation::one();
    case ChiKind::psipow: {
        UnitRotation base = (p == T.q()) ? UnitRotation::zero()
                                         : UnitRotation::rot(1, T.quotient_of(p));
        return rot_pow(base, k_); // k_ >= 1, so Zero^k stays Zero
    }
    case ChiKind::constant:
        return const_;
    }
    throw std::logic_error("unreachable chi kind");
}

UnitRotation ChiFunction::value_at(std::uint64_t m) const {
    const PrimeTable& T = *table_;
    if (m < 1 || m > T.limit()) throw std::out_of_range("argument outside [1, limit]");
    UnitRotation acc = UnitRotation::one();
    while (m > 1) {
        std::uint64_t p = T.spf(m);
        std::uint64_t e = 0;
        while (m % p == 0) { m /= p; ++e; }
        acc = rot_mul(acc, rot_pow(prime_value(p), e));
        if (acc.is_zero()) return acc; // absorbing, no need to finish the chain
    }
    return acc;
}

std::string ChiFunction::describe() const {
    std::string qs = std::to_string(table_->q());
    switch (kind_) {
    case ChiKind::chi0: return "chi0";
    case ChiKind::psi: return "psi(q=" + qs + ")";
    case ChiKind::varpi: return "varpi(q=" + qs + ")";
    case ChiKind::psit: return "psit(q=" + qs + ",t=" + std::to_string(t_) + ")";
    case ChiKind::psipow: return "psipow(q=" + qs + ",k=" + std::to_string(k_) + ")";
    case ChiKind::constant: return "const(" + const_.str() + ")";
    }
    return "?";
}

} // namespace horomean
