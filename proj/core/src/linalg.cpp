#include "tcpd/linalg.hpp"

#include <bit>
#include <utility>

namespace tcpd {

namespace {

/// Applies elementary row operations to a working matrix while keeping
/// transform (accumulated on the left) and its inverse (on the right) in sync.
template <ScalarRing Ring>
class RowOpTracker {
public:
    using Elem = typename Ring::Elem;

    explicit RowOpTracker(const Matrix<Ring>& m)
        : work(m),
          transform(Matrix<Ring>::identity(m.ring(), m.rows())),
          transform_inverse(Matrix<Ring>::identity(m.ring(), m.rows())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        swap_row_contents(work, a, b);
        swap_row_contents(transform, a, b);
        for (std::size_t i = 0; i < transform_inverse.rows(); ++i)
            std::swap(transform_inverse(i, a), transform_inverse(i, b));
    }

    /// row r *= s, where s * s_inverse == 1.
    void scale_row(std::size_t r, const Elem s, const Elem s_inverse) {
        const Ring& ring = work.ring();
        for (auto& e : work.row(r)) e = ring.mul(e, s);
        for (auto& e : transform.row(r)) e = ring.mul(e, s);
        for (std::size_t i = 0; i < transform_inverse.rows(); ++i)
            transform_inverse(i, r) = ring.mul(transform_inverse(i, r), s_inverse);
    }

    /// row target -= c * row source.
    void subtract_multiple(std::size_t target, std::size_t source, const Elem c) {
        const Ring& ring = work.ring();
        auto axpy = [&](Matrix<Ring>& m) {
            auto dst = m.row(target);
            auto src = m.row(source);
            for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = ring.sub(dst[j], ring.mul(c, src[j]));
        };
        axpy(work);
        axpy(transform);
        for (std::size_t i = 0; i < transform_inverse.rows(); ++i)
            transform_inverse(i, source) =
                ring.add(transform_inverse(i, source), ring.mul(c, transform_inverse(i, target)));
    }

    Matrix<Ring> work;
    Matrix<Ring> transform;
    Matrix<Ring> transform_inverse;

private:
    static void swap_row_contents(Matrix<Ring>& m, std::size_t a, std::size_t b) {
        auto ra = m.row(a);
        auto rb = m.row(b);
        for (std::size_t j = 0; j < ra.size(); ++j) std::swap(ra[j], rb[j]);
    }
};

} // namespace

RrefResult rref(const Matrix<PrimeField>& m) {
    const PrimeField& f = m.ring();
    RowOpTracker<PrimeField> ops(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && ops.work(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        ops.swap_rows(r, pivot);
        const auto lead = ops.work(r, col);
        if (lead != 1) ops.scale_row(r, f.inv(lead), lead);
        for (std::size_t k = 0; k < m.rows(); ++k)
            if (k != r && ops.work(k, col) != 0) ops.subtract_multiple(k, r, ops.work(k, col));
        pivots.push_back(col);
        ++r;
    }
    return RrefResult{std::move(ops.work), std::move(ops.transform), std::move(ops.transform_inverse), r,
                      std::move(pivots)};
}

std::size_t gf2_rank(const Matrix<PrimeField>& m) {
    if (m.ring().modulus() != 2) throw InvalidArgument("gf2_rank needs GF(2)");
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> rows(m.rows() * words, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    std::size_t rank = 0;
    for (std::size_t w = 0; w < words && rank < m.rows(); ++w) {
        for (unsigned bit = 0; bit < 64 && rank < m.rows(); ++bit) {
            const std::uint64_t mask = std::uint64_t{1} << bit;
            std::size_t pivot = rank;
            while (pivot < m.rows() && !(rows[pivot * words + w] & mask)) ++pivot;
            if (pivot == m.rows()) continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < words; ++k) std::swap(rows[pivot * words + k], rows[rank * words + k]);
            for (std::size_t i = rank + 1; i < m.rows(); ++i)
                if (rows[i * words + w] & mask)
                    for (std::size_t k = w; k < words; ++k) rows[i * words + k] ^= rows[rank * words + k];
            ++rank;
        }
    }
    return rank;
}

std::size_t matrix_rank(const Matrix<PrimeField>& m) {
    if (m.ring().modulus() == 2) return gf2_rank(m);
    return rref(m).rank;
}

std::optional<Matrix<PrimeField>> invert(const Matrix<PrimeField>& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("invert needs a square matrix");
    auto res = rref(m);
    if (res.rank != m.rows()) return std::nullopt;
    return std::move(res.transform);
}

template <ScalarRing Ring>
BorderRowReduction<Ring> border_row_reduce(const Matrix<Ring>& m) {
    const Ring& ring = m.ring();
    const int none = ring.exponent();
    RowOpTracker<Ring> ops(m);
    std::vector<std::size_t> pivot_cols;
    std::vector<int> pivot_vals;
    std::size_t r = 0;
    while (r < m.rows()) {
        int best = none;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = r; i < m.rows() && best > 0; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const int v = ring.valuation(ops.work(i, j));
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == none) break;
        ops.swap_rows(r, bi);
        const auto unit = ring.shift_down(ops.work(r, bj), best);
        if (!(unit == ring.one())) ops.scale_row(r, ring.inv(unit), unit);
        for (std::size_t k = r + 1; k < m.rows(); ++k) {
            const auto& e = ops.work(k, bj);
            if (ring.is_zero(e)) continue;
            ops.subtract_multiple(k, r, ring.shift_down(e, best));
        }
        pivot_cols.push_back(bj);
        pivot_vals.push_back(best);
        ++r;
    }
    BorderRowReduction<Ring> out{row_block(ops.work, 0, r), column_block(ops.transform_inverse, 0, r),
                                 std::move(ops.transform), std::move(ops.transform_inverse), r,
                                 std::move(pivot_cols), std::move(pivot_vals)};
    return out;
}

template BorderRowReduction<PrimeField> border_row_reduce(const Matrix<PrimeField>&);
template BorderRowReduction<BorderRing> border_row_reduce(const Matrix<BorderRing>&);

bool field_as_border_consistency(const Matrix<PrimeField>& m) {
    const BorderRing ring(m.ring(), 1);
    Matrix<BorderRing> lifted(ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) lifted(i, j) = ring.constant(m(i, j));
    const std::size_t expected = rref(m).rank;
    return border_row_reduce(lifted).rank == expected && border_row_reduce(m).rank == expected;
}

RowSpanBasis::RowSpanBasis(PrimeField field, std::size_t width)
    : field_(std::move(field)), width_(width), scratch_(width) {}

void RowSpanBasis::clear() noexcept {
    rows_.clear();
    pivots_.clear();
}

bool RowSpanBasis::insert(std::span<const PrimeField::Elem> v) {
    if (v.size() != width_) throw ShapeMismatch("RowSpanBasis: vector length differs from basis width");
    std::copy(v.begin(), v.end(), scratch_.begin());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const auto c = scratch_[pivots_[k]];
        if (c == 0) continue;
        const auto* row = rows_.data() + k * width_;
        for (std::size_t j = 0; j < width_; ++j) scratch_[j] = field_.sub(scratch_[j], field_.mul(c, row[j]));
    }
    std::size_t pivot = 0;
    while (pivot < width_ && scratch_[pivot] == 0) ++pivot;
    if (pivot == width_) return false;
    const auto s = field_.inv(scratch_[pivot]);
    for (auto& e : scratch_) e = field_.mul(e, s);
    rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
    pivots_.push_back(pivot);
    return true;
}

Gf2RowSpanBasis::Gf2RowSpanBasis(std::size_t width)
    : width_(width), words_((width + 63) / 64), scratch_(words_) {}

void Gf2RowSpanBasis::clear() noexcept {
    rows_.clear();
    pivots_.clear();
}

bool Gf2RowSpanBasis::insert(std::span<const PrimeField::Elem> v) {
    if (v.size() != width_) throw ShapeMismatch("Gf2RowSpanBasis: vector length differs from basis width");
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (std::size_t j = 0; j < width_; ++j)
        if (v[j] & 1u) scratch_[j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (!(scratch_[p / 64] >> (p % 64) & 1u)) continue;
        for (std::size_t w = 0; w < words_; ++w) scratch_[w] ^= rows_[k * words_ + w];
    }
    for (std::size_t w = 0; w < words_; ++w) {
        if (scratch_[w] == 0) continue;
        pivots_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(scratch_[w])));
        rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
        return true;
    }
    return false;
}

} // namespace tcpd
