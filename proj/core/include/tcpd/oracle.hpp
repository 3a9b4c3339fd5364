#pragma once

#include "tcpd/tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace tcpd {

/// Largest number of term multisets a brute-force oracle will try per rank.
inline constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 26;

template <ScalarRing Ring>
struct OracleResult {
    /// Minimal rank, or nullopt when it exceeds max_rank.
    std::optional<std::size_t> rank;
    std::optional<Cpd<Ring>> witness;
};

/// Exhaustive enumeration of all multisets of R column tuples for
/// R = 0, 1, ..., max_rank. Throws TooLarge if the number of multisets
/// exceeds kOracleLimit for an R that has to be enumerated, or if the
/// table of rank-1 terms would be too large.
OracleResult<PrimeField> oracle_rank(const Tensor<PrimeField>& t, std::size_t max_rank);
OracleResult<BorderRing> oracle_border_rank(const Tensor<BorderRing>& t, std::size_t max_rank);

} // namespace tcpd
