#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace tcpd {

bool is_prime(std::uint32_t n) noexcept;

/// The prime field GF(p), p <= 2^16.
///
/// Elements are plain residues in [0, p). The field object carries the
/// modulus and a shared inverse table, so copies are cheap and every
/// operation goes through the field instance.
class PrimeField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    /// Throws InvalidArgument unless p is a prime <= kMaxModulus.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }
    /// Number of elements.
    std::uint64_t size() const noexcept { return p_; }
    /// Exponent threshold of the trivial border ring F[x]/(x).
    int exponent() const noexcept { return 1; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem from_int(std::int64_t v) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        return static_cast<Elem>(((v % m) + m) % m);
    }

    Elem add(Elem a, Elem b) const noexcept {
        const Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const noexcept {
        return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    }
    /// Throws ZeroInverse for a == 0.
    Elem inv(Elem a) const;

    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool is_unit(Elem a) const noexcept { return a != 0; }
    /// 0 for nonzero elements, 1 (= exponent()) for zero.
    int valuation(Elem a) const noexcept { return a == 0 ? 1 : 0; }
    /// Exact division by x^h; only h == 0 can occur over a field.
    Elem shift_down(Elem a, int /*h*/) const noexcept { return a; }

    /// Element with enumeration index `index` in [0, size()).
    Elem element(std::uint64_t index) const noexcept { return static_cast<Elem>(index); }

    bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

private:
    std::uint32_t p_;
    std::shared_ptr<const std::vector<Elem>> inverses_;
};

} // namespace tcpd
