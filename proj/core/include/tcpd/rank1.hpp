#pragma once

#include "tcpd/tensor.hpp"

#include <optional>
#include <span>

namespace tcpd {

/// Rank-<=1 CPD of a field tensor, or nullopt when some unfolding has rank >= 2.
///
/// Anchors at the first nonzero entry c and uses the fibers through it:
/// the axis-0 fiber as is, every other fiber divided by c.
std::optional<Cpd<PrimeField>> try_rank1(const Tensor<PrimeField>& t);

/// Border-ring analog, built from the axis reduction: when every axis-rank
/// is <= 1 the reduced tensor is a single scalar s and T = s L_0 (x) L_1 ...
std::optional<Cpd<BorderRing>> try_rank1_border(const Tensor<BorderRing>& t);

/// In-place rank-<=1 test for a row-major field tensor given by shape and
/// data. On success writes one vector per axis (concatenated, axis order)
/// into `factors`, which must hold sum(shape) entries; a zero tensor yields
/// true with all-zero factors.
bool rank1_factors(const PrimeField& field, std::span<const std::size_t> shape,
                   std::span<const PrimeField::Elem> data, std::span<PrimeField::Elem> factors);

} // namespace tcpd
