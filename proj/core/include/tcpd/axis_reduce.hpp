#pragma once

#include "tcpd/tensor.hpp"

#include <cstddef>
#include <vector>

namespace tcpd {

/// A tensor shrunk to its axis-ranks together with the per-axis maps that
/// carry CPDs back and forth.
template <ScalarRing Ring>
struct AxisReduction {
    /// Shape r_0 x ... x r_{D-1}.
    Tensor<Ring> reduced;
    /// L_d (n_d x r_d): original == lifts applied to reduced on every axis.
    std::vector<Matrix<Ring>> lifts;
    /// P_d (r_d x n_d): reduced == projections applied to the original.
    std::vector<Matrix<Ring>> projections;
    std::vector<std::size_t> axis_ranks;
};

/// Field axis reduction: P_d is the top r_d rows of the rref transform of
/// unfold(T, d) and L_d the leading r_d columns of its inverse.
AxisReduction<PrimeField> axis_reduce(const Tensor<PrimeField>& t);

/// Same construction with border_row_reduce on each unfolding.
AxisReduction<BorderRing> border_axis_reduce(const Tensor<BorderRing>& t);

inline AxisReduction<PrimeField> reduce_axes(const Tensor<PrimeField>& t) { return axis_reduce(t); }
inline AxisReduction<BorderRing> reduce_axes(const Tensor<BorderRing>& t) { return border_axis_reduce(t); }

/// Maps a CPD of red.reduced to a CPD of the original tensor (A_d -> L_d A_d).
template <ScalarRing Ring>
Cpd<Ring> lift_cpd(const AxisReduction<Ring>& red, const Cpd<Ring>& cpd) {
    if (cpd.order() != red.lifts.size()) throw ShapeMismatch("lift_cpd: CPD order differs from tensor order");
    Cpd<Ring> out;
    for (std::size_t d = 0; d < cpd.order(); ++d) {
        if (cpd.factors[d].rows() != red.axis_ranks[d])
            throw ShapeMismatch("lift_cpd: factor " + std::to_string(d) + " has " +
                                std::to_string(cpd.factors[d].rows()) + " rows, reduced axis has " +
                                std::to_string(red.axis_ranks[d]));
        out.factors.push_back(multiply(red.lifts[d], cpd.factors[d]));
    }
    return out;
}

/// Applies every lift to the reduced tensor, reproducing the original.
template <ScalarRing Ring>
Tensor<Ring> expand(const AxisReduction<Ring>& red) {
    Tensor<Ring> t = red.reduced;
    for (std::size_t d = 0; d < red.lifts.size(); ++d) t = mode_product(red.lifts[d], t, d);
    return t;
}

} // namespace tcpd
