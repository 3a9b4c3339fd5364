#pragma once

#include "tcpd/tensor.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tcpd::testing {

inline Tensor<PrimeField> field_tensor(const PrimeField& f, Shape shape, const std::vector<std::int64_t>& values) {
    std::vector<PrimeField::Elem> data;
    for (auto v : values) data.push_back(f.from_int(v));
    return Tensor<PrimeField>(f, std::move(shape), std::move(data));
}

inline Matrix<PrimeField> field_matrix(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<PrimeField::Elem>> conv;
    for (const auto& r : rows) {
        conv.emplace_back();
        for (auto v : r) conv.back().push_back(f.from_int(v));
    }
    return Matrix<PrimeField>::from_rows(f, conv);
}

/// [[[0,1],[1,0]],[[1,0],[0,0]]]: rank 3, border rank 2.
inline Tensor<PrimeField> w_tensor(const PrimeField& f) {
    return field_tensor(f, {2, 2, 2}, {0, 1, 1, 0, 1, 0, 0, 0});
}

/// Tensor whose row-major entries are the base-p digits of `code`, most significant first.
inline Tensor<PrimeField> tensor_from_code(const PrimeField& f, const Shape& shape, std::uint64_t code) {
    std::vector<PrimeField::Elem> data(shape_volume(shape));
    for (std::size_t i = data.size(); i-- > 0;) {
        data[i] = static_cast<PrimeField::Elem>(code % f.modulus());
        code /= f.modulus();
    }
    return Tensor<PrimeField>(f, shape, std::move(data));
}

/// Ring matrix/tensor whose entries are ring.element(digit) for base-|R| digits of `code`.
inline Tensor<BorderRing> ring_tensor_from_code(const BorderRing& ring, const Shape& shape, std::uint64_t code) {
    std::vector<Poly> data(shape_volume(shape));
    for (std::size_t i = data.size(); i-- > 0;) {
        data[i] = ring.element(code % ring.size());
        code /= ring.size();
    }
    return Tensor<BorderRing>(ring, shape, std::move(data));
}

template <ScalarRing Ring>
typename Ring::Elem random_elem(const Ring& ring, std::mt19937_64& rng) {
    return ring.element(std::uniform_int_distribution<std::uint64_t>(0, ring.size() - 1)(rng));
}

template <ScalarRing Ring>
Matrix<Ring> random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix<Ring> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_elem(ring, rng);
    return m;
}

template <ScalarRing Ring>
Tensor<Ring> random_tensor(const Ring& ring, const Shape& shape, std::mt19937_64& rng) {
    Tensor<Ring> t(ring, shape);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = random_elem(ring, rng);
    return t;
}

template <ScalarRing Ring>
Cpd<Ring> random_cpd(const Ring& ring, const Shape& shape, std::size_t rank, std::mt19937_64& rng) {
    Cpd<Ring> cpd;
    for (auto n : shape) cpd.factors.push_back(random_matrix(ring, n, rank, rng));
    return cpd;
}

} // namespace tcpd::testing
