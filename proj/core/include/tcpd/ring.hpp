#pragma once

#include "tcpd/border_ring.hpp"
#include "tcpd/field.hpp"

#include <concepts>
#include <cstdint>
#include <string>

namespace tcpd {

/// Operations shared by PrimeField and BorderRing. Linear algebra and the
/// searches are written once against this interface; a prime field behaves
/// as the border ring with H = 1.
template <class R>
concept ScalarRing = std::copyable<R> && requires(const R& r, const typename R::Elem& a, int h,
                                                  std::uint64_t i) {
    typename R::Elem;
    { r.size() } -> std::convertible_to<std::uint64_t>;
    { r.exponent() } -> std::convertible_to<int>;
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.add(a, a) } -> std::same_as<typename R::Elem>;
    { r.sub(a, a) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.mul(a, a) } -> std::same_as<typename R::Elem>;
    { r.inv(a) } -> std::same_as<typename R::Elem>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.is_unit(a) } -> std::convertible_to<bool>;
    { r.valuation(a) } -> std::convertible_to<int>;
    { r.shift_down(a, h) } -> std::same_as<typename R::Elem>;
    { r.element(i) } -> std::same_as<typename R::Elem>;
    { r == r } -> std::convertible_to<bool>;
};

static_assert(ScalarRing<PrimeField>);
static_assert(ScalarRing<BorderRing>);

inline std::string describe(const PrimeField& f) {
    return "GF(" + std::to_string(f.modulus()) + ")";
}

inline std::string describe(const BorderRing& r) {
    return "GF(" + std::to_string(r.field().modulus()) + ")[x]/(x^" +
           std::to_string(r.exponent()) + ")";
}

/// base^exp, saturating at UINT64_MAX.
constexpr std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
        result *= base;
    }
    return result;
}

} // namespace tcpd
