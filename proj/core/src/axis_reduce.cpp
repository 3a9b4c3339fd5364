#include "tcpd/axis_reduce.hpp"

#include "tcpd/linalg.hpp"

namespace tcpd {

namespace {

template <ScalarRing Ring>
struct AxisBasis {
    Matrix<Ring> transform;
    Matrix<Ring> transform_inverse;
    std::size_t rank;
};

AxisBasis<PrimeField> axis_basis(const Matrix<PrimeField>& unfolding) {
    auto res = rref(unfolding);
    return {std::move(res.transform), std::move(res.transform_inverse), res.rank};
}

AxisBasis<BorderRing> axis_basis(const Matrix<BorderRing>& unfolding) {
    auto res = border_row_reduce(unfolding);
    return {std::move(res.transform), std::move(res.transform_inverse), res.rank};
}

template <ScalarRing Ring>
AxisReduction<Ring> reduce_generic(const Tensor<Ring>& t) {
    AxisReduction<Ring> red{t, {}, {}, {}};
    // Every basis comes from the original tensor's unfolding; the projections
    // are then applied one axis at a time.
    for (std::size_t d = 0; d < t.order(); ++d) {
        auto basis = axis_basis(unfold(t, d));
        red.axis_ranks.push_back(basis.rank);
        red.projections.push_back(row_block(basis.transform, 0, basis.rank));
        red.lifts.push_back(column_block(basis.transform_inverse, 0, basis.rank));
    }
    for (std::size_t d = 0; d < t.order(); ++d) red.reduced = mode_product(red.projections[d], red.reduced, d);
    return red;
}

} // namespace

AxisReduction<PrimeField> axis_reduce(const Tensor<PrimeField>& t) { return reduce_generic(t); }

AxisReduction<BorderRing> border_axis_reduce(const Tensor<BorderRing>& t) { return reduce_generic(t); }

} // namespace tcpd
