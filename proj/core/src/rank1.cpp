#include "tcpd/rank1.hpp"

#include "tcpd/axis_reduce.hpp"

#include <vector>

namespace tcpd {

bool rank1_factors(const PrimeField& field, std::span<const std::size_t> shape,
                   std::span<const PrimeField::Elem> data, std::span<PrimeField::Elem> factors) {
    const std::size_t order = shape.size();
    std::size_t anchor = 0;
    while (anchor < data.size() && data[anchor] == 0) ++anchor;
    std::fill(factors.begin(), factors.end(), 0);
    if (anchor == data.size()) return true;

    // Multi-index of the anchor and row-major strides.
    std::size_t anchor_idx[16];
    std::size_t stride[16];
    {
        std::size_t rest = anchor, s = 1;
        for (std::size_t d = order; d-- > 0;) {
            anchor_idx[d] = rest % shape[d];
            rest /= shape[d];
            stride[d] = s;
            s *= shape[d];
        }
    }
    const auto c_inv = field.inv(data[anchor]);
    std::size_t offset = 0;
    for (std::size_t d = 0; d < order; ++d) {
        const std::size_t base = anchor - anchor_idx[d] * stride[d];
        for (std::size_t i = 0; i < shape[d]; ++i) {
            const auto e = data[base + i * stride[d]];
            factors[offset + i] = d == 0 ? e : field.mul(e, c_inv);
        }
        offset += shape[d];
    }

    // Re-evaluate the outer product entry by entry.
    std::size_t idx[16] = {};
    std::size_t starts[16];
    offset = 0;
    for (std::size_t d = 0; d < order; ++d) {
        starts[d] = offset;
        offset += shape[d];
    }
    PrimeField::Elem prefix[17];
    prefix[0] = 1;
    for (std::size_t d = 0; d < order; ++d) prefix[d + 1] = field.mul(prefix[d], factors[starts[d]]);
    for (std::size_t flat = 0;; ++flat) {
        if (prefix[order] != data[flat]) return false;
        if (flat + 1 == data.size()) break;
        std::size_t d = order;
        while (d-- > 0) {
            if (++idx[d] < shape[d]) break;
            idx[d] = 0;
        }
        for (std::size_t e = d; e < order; ++e) prefix[e + 1] = field.mul(prefix[e], factors[starts[e] + idx[e]]);
    }
    return true;
}

std::optional<Cpd<PrimeField>> try_rank1(const Tensor<PrimeField>& t) {
    if (t.order() > 16) throw InvalidArgument("try_rank1 supports at most 16 axes");
    const PrimeField& field = t.ring();
    if (t.is_zero()) return Cpd<PrimeField>::empty(field, t.shape());
    std::size_t total = 0;
    for (auto n : t.shape()) total += n;
    std::vector<PrimeField::Elem> factors(total);
    if (!rank1_factors(field, t.shape(), t.data(), factors)) return std::nullopt;
    Cpd<PrimeField> cpd;
    std::size_t offset = 0;
    for (auto n : t.shape()) {
        cpd.factors.push_back(column_matrix(field, std::span<const PrimeField::Elem>(factors).subspan(offset, n)));
        offset += n;
    }
    return cpd;
}

std::optional<Cpd<BorderRing>> try_rank1_border(const Tensor<BorderRing>& t) {
    const BorderRing& ring = t.ring();
    if (t.is_zero()) return Cpd<BorderRing>::empty(ring, t.shape());
    const auto red = border_axis_reduce(t);
    for (auto r : red.axis_ranks)
        if (r > 1) return std::nullopt;
    // All axis-ranks are exactly 1 here, so the reduced tensor is one scalar.
    Cpd<BorderRing> cpd;
    for (std::size_t d = 0; d < t.order(); ++d) cpd.factors.push_back(red.lifts[d]);
    const auto s = red.reduced[0];
    for (std::size_t i = 0; i < cpd.factors[0].rows(); ++i) cpd.factors[0](i, 0) = ring.mul(s, cpd.factors[0](i, 0));
    return cpd;
}

} // namespace tcpd
