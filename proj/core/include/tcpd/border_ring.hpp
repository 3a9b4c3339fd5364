#pragma once

#include "tcpd/field.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace tcpd {

/// Largest supported exponent threshold H.
inline constexpr int kMaxExponent = 8;

/// Dense truncated polynomial; coeffs[h] is the coefficient of x^h.
/// Coefficients at positions >= H are always zero.
struct Poly {
    std::array<std::uint16_t, kMaxExponent> coeffs{};

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// The border ring F[x]/(x^H) over a prime field.
class BorderRing {
public:
    using Elem = Poly;

    /// Throws InvalidArgument unless 1 <= exponent <= kMaxExponent.
    BorderRing(PrimeField field, int exponent);

    const PrimeField& field() const noexcept { return field_; }
    int exponent() const noexcept { return h_; }
    /// Number of elements, p^H.
    std::uint64_t size() const noexcept { return size_; }

    Elem zero() const noexcept { return {}; }
    Elem one() const noexcept { return constant(1); }
    Elem constant(PrimeField::Elem c) const noexcept {
        Elem e;
        e.coeffs[0] = static_cast<std::uint16_t>(c);
        return e;
    }
    /// x^h, or zero when h >= H.
    Elem x_power(int h) const noexcept;
    /// Builds an element from integer coefficients (reduced mod p).
    /// Throws InvalidArgument if more than H coefficients are given.
    Elem from_coeffs(std::span<const std::int64_t> coeffs) const;
    Elem from_int(std::int64_t v) const noexcept { return constant(field_.from_int(v)); }

    Elem add(const Elem& a, const Elem& b) const noexcept;
    Elem sub(const Elem& a, const Elem& b) const noexcept;
    Elem neg(const Elem& a) const noexcept;
    Elem mul(const Elem& a, const Elem& b) const noexcept;
    /// Scales every coefficient by a field element.
    Elem scale(const Elem& a, PrimeField::Elem c) const noexcept;
    /// Throws NotAUnit when the constant term is zero.
    Elem inv(const Elem& a) const;

    bool is_zero(const Elem& a) const noexcept { return a == Elem{}; }
    bool is_unit(const Elem& a) const noexcept { return a.coeffs[0] != 0; }
    /// Smallest h with a nonzero coefficient; H for zero.
    int valuation(const Elem& a) const noexcept;
    /// a / x^h for an element whose valuation is >= h. The result is the
    /// representative with zero coefficients at positions >= H - h.
    Elem shift_down(const Elem& a, int h) const noexcept;
    /// a * x^h, truncated.
    Elem shift_up(const Elem& a, int h) const noexcept;

    /// Element with enumeration index `index` in [0, size()); the constant
    /// coefficient is the most significant base-p digit.
    Elem element(std::uint64_t index) const noexcept;

    bool operator==(const BorderRing& other) const noexcept {
        return field_ == other.field_ && h_ == other.h_;
    }

private:
    PrimeField field_;
    int h_;
    std::uint64_t size_;
};

} // namespace tcpd
