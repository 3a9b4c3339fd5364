#pragma once

#include "tcpd/errors.hpp"
#include "tcpd/matrix.hpp"
#include "tcpd/ring.hpp"

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tcpd {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_volume(std::span<const std::size_t> shape) noexcept {
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>{});
}

inline std::string shape_string(std::span<const std::size_t> shape) {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape[i]);
    }
    return s + ")";
}

/// Dense D-way tensor (D >= 1), row-major (last index fastest). Axis lengths
/// may be zero, which is how the axis-reduced form of a zero tensor looks.
template <ScalarRing Ring>
class Tensor {
public:
    using Elem = typename Ring::Elem;

    Tensor(Ring ring, Shape shape)
        : ring_(std::move(ring)), shape_(std::move(shape)), data_(shape_volume(shape_), ring_.zero()) {
        check_order();
    }

    Tensor(Ring ring, Shape shape, std::vector<Elem> data)
        : ring_(std::move(ring)), shape_(std::move(shape)), data_(std::move(data)) {
        check_order();
        if (data_.size() != shape_volume(shape_))
            throw ShapeMismatch("tensor of shape " + shape_string(shape_) + " needs " +
                                std::to_string(shape_volume(shape_)) + " entries, got " +
                                std::to_string(data_.size()));
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return shape_.size(); }
    const Shape& shape() const noexcept { return shape_; }
    std::size_t extent(std::size_t axis) const noexcept { return shape_[axis]; }
    std::size_t size() const noexcept { return data_.size(); }

    Elem& operator[](std::size_t flat) noexcept { return data_[flat]; }
    const Elem& operator[](std::size_t flat) const noexcept { return data_[flat]; }

    std::size_t flat_index(std::span<const std::size_t> index) const noexcept {
        std::size_t flat = 0;
        for (std::size_t d = 0; d < shape_.size(); ++d) flat = flat * shape_[d] + index[d];
        return flat;
    }
    Elem& at(std::span<const std::size_t> index) noexcept { return data_[flat_index(index)]; }
    const Elem& at(std::span<const std::size_t> index) const noexcept { return data_[flat_index(index)]; }

    std::span<Elem> data() noexcept { return data_; }
    std::span<const Elem> data() const noexcept { return data_; }

    bool is_zero() const noexcept {
        for (const auto& e : data_)
            if (!ring_.is_zero(e)) return false;
        return true;
    }

    bool operator==(const Tensor& other) const {
        return ring_ == other.ring_ && shape_ == other.shape_ && data_ == other.data_;
    }

private:
    void check_order() const {
        if (shape_.empty()) throw InvalidArgument("tensor must have at least one axis");
    }

    Ring ring_;
    Shape shape_;
    std::vector<Elem> data_;
};

/// Factor matrices A_0..A_{D-1}; factor d is n_d x R.
template <ScalarRing Ring>
struct Cpd {
    std::vector<Matrix<Ring>> factors;

    std::size_t order() const noexcept { return factors.size(); }
    std::size_t rank() const noexcept { return factors.empty() ? 0 : factors.front().cols(); }
    Shape shape() const {
        Shape s;
        for (const auto& f : factors) s.push_back(f.rows());
        return s;
    }

    /// Zero-column CPD for a tensor of the given shape.
    static Cpd empty(const Ring& ring, std::span<const std::size_t> shape) {
        Cpd c;
        for (auto n : shape) c.factors.emplace_back(ring, n, 0);
        return c;
    }

    bool operator==(const Cpd&) const = default;
};

/// Row i is the slice with index i on `axis`, flattened row-major over the
/// remaining axes in ascending order.
template <ScalarRing Ring>
Matrix<Ring> unfold(const Tensor<Ring>& t, std::size_t axis) {
    if (axis >= t.order()) throw InvalidArgument("unfold axis out of range");
    const auto& shape = t.shape();
    std::size_t outer = 1, inner = 1;
    for (std::size_t d = 0; d < axis; ++d) outer *= shape[d];
    for (std::size_t d = axis + 1; d < shape.size(); ++d) inner *= shape[d];
    const std::size_t n = shape[axis];
    Matrix<Ring> m(t.ring(), n, outer * inner);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < inner; ++k) m(i, o * inner + k) = t[(o * n + i) * inner + k];
    return m;
}

/// Contracts `m` (n' x n_axis) against `axis` of `t`.
template <ScalarRing Ring>
Tensor<Ring> mode_product(const Matrix<Ring>& m, const Tensor<Ring>& t, std::size_t axis) {
    if (axis >= t.order()) throw InvalidArgument("mode product axis out of range");
    if (!(m.ring() == t.ring())) throw RingMismatch("mode product over different rings");
    if (m.cols() != t.extent(axis))
        throw ShapeMismatch("mode product: matrix has " + std::to_string(m.cols()) + " columns, axis " +
                            std::to_string(axis) + " has length " + std::to_string(t.extent(axis)));
    const Ring& ring = t.ring();
    Shape out_shape = t.shape();
    out_shape[axis] = m.rows();
    Tensor<Ring> out(ring, out_shape);
    std::size_t outer = 1, inner = 1;
    for (std::size_t d = 0; d < axis; ++d) outer *= t.extent(d);
    for (std::size_t d = axis + 1; d < t.order(); ++d) inner *= t.extent(d);
    const std::size_t n = t.extent(axis), n_out = m.rows();
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t r = 0; r < n_out; ++r)
            for (std::size_t i = 0; i < n; ++i) {
                const auto& coef = m(r, i);
                if (ring.is_zero(coef)) continue;
                const std::size_t src = (o * n + i) * inner;
                const std::size_t dst = (o * n_out + r) * inner;
                for (std::size_t k = 0; k < inner; ++k)
                    out[dst + k] = ring.add(out[dst + k], ring.mul(coef, t[src + k]));
            }
    return out;
}

/// Adds v_0 (x) ... (x) v_{D-1} into `acc` in place.
template <ScalarRing Ring>
void add_outer_into(Tensor<Ring>& acc, std::span<const std::span<const typename Ring::Elem>> vectors) {
    const Ring& ring = acc.ring();
    const std::size_t order = acc.order();
    if (vectors.size() != order) throw ShapeMismatch("outer product: wrong number of vectors");
    for (std::size_t d = 0; d < order; ++d)
        if (vectors[d].size() != acc.extent(d)) throw ShapeMismatch("outer product: vector length mismatch");
    if (acc.size() == 0) return;
    // prefix[d] = product of v_0[i_0] ... v_{d-1}[i_{d-1}] for the current multi-index
    std::vector<typename Ring::Elem> prefix(order + 1, ring.one());
    std::vector<std::size_t> idx(order, 0);
    for (std::size_t d = 0; d < order; ++d) prefix[d + 1] = ring.mul(prefix[d], vectors[d][0]);
    for (std::size_t flat = 0;; ++flat) {
        acc[flat] = ring.add(acc[flat], prefix[order]);
        std::size_t d = order;
        while (d > 0) {
            --d;
            if (++idx[d] < acc.extent(d)) break;
            idx[d] = 0;
        }
        if (flat + 1 == acc.size()) break;
        for (std::size_t e = d; e < order; ++e) prefix[e + 1] = ring.mul(prefix[e], vectors[e][idx[e]]);
    }
}

template <ScalarRing Ring>
Tensor<Ring> outer(const Ring& ring, const std::vector<std::vector<typename Ring::Elem>>& vectors) {
    Shape shape;
    std::vector<std::span<const typename Ring::Elem>> views;
    for (const auto& v : vectors) {
        shape.push_back(v.size());
        views.emplace_back(v);
    }
    Tensor<Ring> t(ring, shape);
    add_outer_into<Ring>(t, views);
    return t;
}

/// Sum over columns r of the outer product of the r-th factor columns.
template <ScalarRing Ring>
Tensor<Ring> cpd_eval(const Cpd<Ring>& cpd) {
    if (cpd.factors.empty()) throw InvalidArgument("CPD has no factors");
    const Ring& ring = cpd.factors.front().ring();
    const std::size_t rank = cpd.rank();
    for (const auto& f : cpd.factors) {
        if (f.cols() != rank) throw ShapeMismatch("CPD factors have different column counts");
        if (!(f.ring() == ring)) throw RingMismatch("CPD factors over different rings");
    }
    Tensor<Ring> t(ring, cpd.shape());
    std::vector<std::vector<typename Ring::Elem>> cols(cpd.order());
    std::vector<std::span<const typename Ring::Elem>> views(cpd.order());
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t d = 0; d < cpd.order(); ++d) {
            const auto& f = cpd.factors[d];
            cols[d].resize(f.rows());
            for (std::size_t i = 0; i < f.rows(); ++i) cols[d][i] = f(i, r);
            views[d] = cols[d];
        }
        add_outer_into<Ring>(t, views);
    }
    return t;
}

template <ScalarRing Ring>
Tensor<Ring> tensor_add(const Tensor<Ring>& a, const Tensor<Ring>& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("tensor_add over different rings");
    if (a.shape() != b.shape())
        throw ShapeMismatch("tensor_add shapes " + shape_string(a.shape()) + " vs " + shape_string(b.shape()));
    Tensor<Ring> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().add(a[i], b[i]);
    return out;
}

template <ScalarRing Ring>
Tensor<Ring> tensor_sub(const Tensor<Ring>& a, const Tensor<Ring>& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("tensor_sub over different rings");
    if (a.shape() != b.shape())
        throw ShapeMismatch("tensor_sub shapes " + shape_string(a.shape()) + " vs " + shape_string(b.shape()));
    Tensor<Ring> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().sub(a[i], b[i]);
    return out;
}

/// Exchanges two axes.
template <ScalarRing Ring>
Tensor<Ring> swap_axes(const Tensor<Ring>& t, std::size_t a, std::size_t b) {
    if (a >= t.order() || b >= t.order()) throw InvalidArgument("swap_axes axis out of range");
    if (a == b) return t;
    Shape shape = t.shape();
    std::swap(shape[a], shape[b]);
    Tensor<Ring> out(t.ring(), shape);
    if (t.size() == 0) return out;
    std::vector<std::size_t> idx(t.order(), 0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        auto swapped = idx;
        std::swap(swapped[a], swapped[b]);
        out.at(swapped) = t[flat];
        for (std::size_t d = t.order(); d-- > 0;) {
            if (++idx[d] < t.extent(d)) break;
            idx[d] = 0;
        }
    }
    return out;
}

/// Embeds a field tensor into F[x]/(x^H) multiplied by x^shift.
Tensor<BorderRing> embed_scaled(const Tensor<PrimeField>& t, const BorderRing& ring, int shift);

/// Matrix-multiplication tensor <m,k,n> of shape mk x kn x nm: entry
/// ((i,j),(j',l),(l',i')) is 1 iff j=j', l=l', i=i', pairs indexed row-major.
Tensor<PrimeField> mm_tensor(std::size_t m, std::size_t k, std::size_t n, const PrimeField& field);

/// Strassen's 7-column CPD of mm_tensor(2, 2, 2) with coefficients in {-1, 0, 1}.
Cpd<PrimeField> strassen_cpd(const PrimeField& field);

} // namespace tcpd
