#include "tcpd/field.hpp"

#include "tcpd/errors.hpp"

#include <string>

namespace tcpd {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > kMaxModulus) throw InvalidArgument("modulus " + std::to_string(p) + " exceeds 2^16");
    if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
    auto table = std::make_shared<std::vector<Elem>>(p, 0);
    // Inverses via the recurrence inv(a) = -(p / a) * inv(p mod a).
    if (p > 1) (*table)[1] = 1;
    for (std::uint32_t a = 2; a < p; ++a)
        (*table)[a] = mul(neg(static_cast<Elem>(p / a)), (*table)[p % a]);
    inverses_ = std::move(table);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw ZeroInverse();
    return (*inverses_)[a];
}

} // namespace tcpd
