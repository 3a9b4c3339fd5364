#pragma once

#include "tcpd/matrix.hpp"
#include "tcpd/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tcpd {

/// transform * input == reduced, transform * transform_inverse == I.
struct RrefResult {
    Matrix<PrimeField> reduced;
    Matrix<PrimeField> transform;
    Matrix<PrimeField> transform_inverse;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination. Pivot: first nonzero entry, top-down, in the
/// leftmost column not yet resolved.
RrefResult rref(const Matrix<PrimeField>& m);

/// Uses the bit-packed path for GF(2).
std::size_t matrix_rank(const Matrix<PrimeField>& m);

std::optional<Matrix<PrimeField>> invert(const Matrix<PrimeField>& m);

/// Rank of a GF(2) matrix via rows packed into 64-bit words.
std::size_t gf2_rank(const Matrix<PrimeField>& m);

/// Result of row reduction over F[x]/(x^H) (or a field, as H = 1).
///
/// input == left * echelon, with left = first `rank` columns of
/// transform_inverse and echelon = first `rank` rows of transform * input.
template <ScalarRing Ring>
struct BorderRowReduction {
    Matrix<Ring> echelon;
    Matrix<Ring> left;
    Matrix<Ring> transform;
    Matrix<Ring> transform_inverse;
    std::size_t rank = 0;
    /// Pivot k sits at row k, column pivot_cols[k], with value x^pivot_valuations[k].
    std::vector<std::size_t> pivot_cols;
    std::vector<int> pivot_valuations;
};

/// Minimal rank factorization by valuation-aware row reduction.
///
/// Each step takes the minimum valuation h over the unfrozen rows, the first
/// such entry in row-major order, moves it up, normalizes it to x^h, and
/// clears that column in the unfrozen rows below. Frozen rows are never
/// modified. Stops when the unfrozen rows are all zero.
template <ScalarRing Ring>
BorderRowReduction<Ring> border_row_reduce(const Matrix<Ring>& m);

extern template BorderRowReduction<PrimeField> border_row_reduce(const Matrix<PrimeField>&);
extern template BorderRowReduction<BorderRing> border_row_reduce(const Matrix<BorderRing>&);

template <ScalarRing Ring>
std::size_t border_rank(const Matrix<Ring>& m) {
    return border_row_reduce(m).rank;
}

/// Embeds a field matrix into F[x]/(x^1) and compares the border reduction
/// rank against rref's.
bool field_as_border_consistency(const Matrix<PrimeField>& m);

/// Incrementally maintained echelon basis of a row space over a prime field.
class RowSpanBasis {
public:
    RowSpanBasis(PrimeField field, std::size_t width);

    /// Adds v if it is independent of the rows added so far; returns whether it was.
    bool insert(std::span<const PrimeField::Elem> v);
    std::size_t size() const noexcept { return pivots_.size(); }
    std::size_t width() const noexcept { return width_; }
    void clear() noexcept;

private:
    PrimeField field_;
    std::size_t width_;
    std::vector<PrimeField::Elem> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<PrimeField::Elem> scratch_;
};

/// RowSpanBasis for GF(2) with rows packed into words.
class Gf2RowSpanBasis {
public:
    explicit Gf2RowSpanBasis(std::size_t width);

    bool insert(std::span<const PrimeField::Elem> v);
    std::size_t size() const noexcept { return pivots_.size(); }
    void clear() noexcept;

private:
    std::size_t width_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::uint64_t> scratch_;
};

} // namespace tcpd
