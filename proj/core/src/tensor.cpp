#include "tcpd/tensor.hpp"

#include <array>

namespace tcpd {

Tensor<BorderRing> embed_scaled(const Tensor<PrimeField>& t, const BorderRing& ring, int shift) {
    if (!(t.ring() == ring.field())) throw RingMismatch("embed_scaled: tensor field differs from ring field");
    const auto xh = ring.x_power(shift);
    Tensor<BorderRing> out(ring, t.shape());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = ring.mul(xh, ring.constant(t[i]));
    return out;
}

Tensor<PrimeField> mm_tensor(std::size_t m, std::size_t k, std::size_t n, const PrimeField& field) {
    if (m == 0 || k == 0 || n == 0) throw InvalidArgument("mm_tensor dimensions must be positive");
    Tensor<PrimeField> t(field, {m * k, k * n, n * m});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::array<std::size_t, 3> idx{i * k + j, j * n + l, l * m + i};
                t.at(idx) = field.one();
            }
    return t;
}

Cpd<PrimeField> strassen_cpd(const PrimeField& field) {
    // Columns are M1..M7; rows index A_ij / B_jl as 2i+j / 2j+l, and the
    // third factor indexes C_il at 2l+i.
    constexpr int a[4][7] = {{1, 0, 1, 0, 1, -1, 0},
                             {0, 0, 0, 0, 1, 0, 1},
                             {0, 1, 0, 0, 0, 1, 0},
                             {1, 1, 0, 1, 0, 0, -1}};
    constexpr int b[4][7] = {{1, 1, 0, -1, 0, 1, 0},
                             {0, 0, 1, 0, 0, 1, 0},
                             {0, 0, 0, 1, 0, 0, 1},
                             {1, 0, -1, 0, 1, 0, 1}};
    constexpr int c[4][7] = {{1, 0, 0, 1, -1, 0, 1},
                             {0, 1, 0, 1, 0, 0, 0},
                             {0, 0, 1, 0, 1, 0, 0},
                             {1, -1, 1, 0, 0, 1, 0}};
    Cpd<PrimeField> cpd;
    for (const auto* table : {a, b, c}) {
        Matrix<PrimeField> f(field, 4, 7);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t r = 0; r < 7; ++r) f(i, r) = field.from_int(table[i][r]);
        cpd.factors.push_back(std::move(f));
    }
    return cpd;
}

} // namespace tcpd
