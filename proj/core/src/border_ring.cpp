#include "tcpd/border_ring.hpp"

#include "tcpd/errors.hpp"
#include "tcpd/ring.hpp"

#include <string>

namespace tcpd {

BorderRing::BorderRing(PrimeField field, int exponent)
    : field_(std::move(field)), h_(exponent), size_(saturating_pow(field_.size(), static_cast<std::uint64_t>(exponent))) {
    if (exponent < 1 || exponent > kMaxExponent)
        throw InvalidArgument("exponent threshold " + std::to_string(exponent) + " outside [1, " +
                              std::to_string(kMaxExponent) + "]");
}

Poly BorderRing::x_power(int h) const noexcept {
    Poly e;
    if (h >= 0 && h < h_) e.coeffs[h] = 1;
    return e;
}

Poly BorderRing::from_coeffs(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(h_))
        throw InvalidArgument("ring element has " + std::to_string(coeffs.size()) + " coefficients, H = " +
                              std::to_string(h_));
    Poly e;
    for (std::size_t h = 0; h < coeffs.size(); ++h) e.coeffs[h] = static_cast<std::uint16_t>(field_.from_int(coeffs[h]));
    return e;
}

Poly BorderRing::add(const Poly& a, const Poly& b) const noexcept {
    Poly r;
    for (int h = 0; h < h_; ++h) r.coeffs[h] = static_cast<std::uint16_t>(field_.add(a.coeffs[h], b.coeffs[h]));
    return r;
}

Poly BorderRing::sub(const Poly& a, const Poly& b) const noexcept {
    Poly r;
    for (int h = 0; h < h_; ++h) r.coeffs[h] = static_cast<std::uint16_t>(field_.sub(a.coeffs[h], b.coeffs[h]));
    return r;
}

Poly BorderRing::neg(const Poly& a) const noexcept {
    Poly r;
    for (int h = 0; h < h_; ++h) r.coeffs[h] = static_cast<std::uint16_t>(field_.neg(a.coeffs[h]));
    return r;
}

Poly BorderRing::mul(const Poly& a, const Poly& b) const noexcept {
    const std::uint64_t p = field_.modulus();
    Poly r;
    for (int h = 0; h < h_; ++h) {
        std::uint64_t acc = 0;
        for (int i = 0; i <= h; ++i) acc += std::uint64_t{a.coeffs[i]} * b.coeffs[h - i];
        r.coeffs[h] = static_cast<std::uint16_t>(acc % p);
    }
    return r;
}

Poly BorderRing::scale(const Poly& a, PrimeField::Elem c) const noexcept {
    Poly r;
    for (int h = 0; h < h_; ++h) r.coeffs[h] = static_cast<std::uint16_t>(field_.mul(a.coeffs[h], c));
    return r;
}

Poly BorderRing::inv(const Poly& a) const {
    if (a.coeffs[0] == 0) throw NotAUnit();
    // b_0 = 1/a_0; b_h = -(1/a_0) * sum_{h' < h} a_{h-h'} b_{h'}
    const PrimeField::Elem lead_inv = field_.inv(a.coeffs[0]);
    Poly b;
    b.coeffs[0] = static_cast<std::uint16_t>(lead_inv);
    for (int h = 1; h < h_; ++h) {
        PrimeField::Elem acc = 0;
        for (int k = 0; k < h; ++k) acc = field_.add(acc, field_.mul(a.coeffs[h - k], b.coeffs[k]));
        b.coeffs[h] = static_cast<std::uint16_t>(field_.neg(field_.mul(lead_inv, acc)));
    }
    return b;
}

int BorderRing::valuation(const Poly& a) const noexcept {
    for (int h = 0; h < h_; ++h)
        if (a.coeffs[h] != 0) return h;
    return h_;
}

Poly BorderRing::shift_down(const Poly& a, int h) const noexcept {
    Poly r;
    for (int i = h; i < h_; ++i) r.coeffs[i - h] = a.coeffs[i];
    return r;
}

Poly BorderRing::shift_up(const Poly& a, int h) const noexcept {
    Poly r;
    for (int i = 0; i + h < h_; ++i) r.coeffs[i + h] = a.coeffs[i];
    return r;
}

Poly BorderRing::element(std::uint64_t index) const noexcept {
    const std::uint64_t p = field_.modulus();
    Poly e;
    for (int h = h_ - 1; h >= 0; --h) {
        e.coeffs[h] = static_cast<std::uint16_t>(index % p);
        index /= p;
    }
    return e;
}

} // namespace tcpd
