#include "tcpd/oracle.hpp"

#include "tcpd/enumerate.hpp"

#include <cstdint>
#include <string>

namespace tcpd {

namespace {

/// Upper bound on the precomputed table of rank-1 tensors (entries).
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 24;

/// C(n + k - 1, k), saturating.
std::uint64_t multisets(std::uint64_t n, std::uint64_t k) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t top = n + i - 1;
        if (c > UINT64_MAX / top) return UINT64_MAX;
        c = c * top / i;
    }
    return c;
}

template <ScalarRing Ring>
OracleResult<Ring> oracle_generic(const Tensor<Ring>& t, std::size_t max_rank) {
    const Ring& ring = t.ring();
    OracleResult<Ring> result;
    if (t.is_zero()) {
        result.rank = 0;
        result.witness = Cpd<Ring>::empty(ring, t.shape());
        return result;
    }
    if (max_rank == 0) return result;

    std::size_t width = 0;
    for (auto n : t.shape()) width += n;
    const std::uint64_t columns = saturating_pow(ring.size(), width);
    if (columns > kOracleLimit || columns * t.size() > kTableLimit)
        throw TooLarge("oracle: " + std::to_string(columns) + " column tuples per rank");

    // Every column tuple (u_0, ..., u_{D-1}) and its outer product.
    std::vector<std::vector<typename Ring::Elem>> tuples;
    std::vector<typename Ring::Elem> table;
    tuples.reserve(columns);
    table.reserve(columns * t.size());
    {
        VectorEnumerator<Ring> it(ring, width);
        do {
            const auto flat = it.current();
            tuples.emplace_back(flat.begin(), flat.end());
            std::vector<std::vector<typename Ring::Elem>> parts;
            std::size_t pos = 0;
            for (auto n : t.shape()) {
                parts.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                                   flat.begin() + static_cast<std::ptrdiff_t>(pos + n));
                pos += n;
            }
            const auto term = outer(ring, parts);
            table.insert(table.end(), term.data().begin(), term.data().end());
        } while (it.next());
    }

    const std::size_t size = t.size();
    for (std::size_t rank = 1; rank <= max_rank; ++rank) {
        // Terms commute, so only nondecreasing index tuples are tried.
        const std::uint64_t count = multisets(columns, rank);
        if (count > kOracleLimit)
            throw TooLarge("oracle: " + std::to_string(columns) + " column tuples choose " + std::to_string(rank) +
                           " with repetition exceeds the enumeration limit");
        // partial[k] holds the sum of the first k chosen terms.
        std::vector<std::vector<typename Ring::Elem>> partial(rank + 1,
                                                              std::vector<typename Ring::Elem>(size, ring.zero()));
        std::vector<std::uint64_t> digits(rank, 0);
        std::size_t dirty = 0;
        for (;;) {
            for (std::size_t k = dirty; k < rank; ++k) {
                const auto* term = table.data() + digits[k] * size;
                for (std::size_t i = 0; i < size; ++i) partial[k + 1][i] = ring.add(partial[k][i], term[i]);
            }
            bool equal = true;
            for (std::size_t i = 0; i < size && equal; ++i) equal = partial[rank][i] == t[i];
            if (equal) {
                Cpd<Ring> witness;
                std::size_t pos = 0;
                for (auto n : t.shape()) {
                    Matrix<Ring> f(ring, n, rank);
                    for (std::size_t c = 0; c < rank; ++c)
                        for (std::size_t i = 0; i < n; ++i) f(i, c) = tuples[digits[c]][pos + i];
                    witness.factors.push_back(std::move(f));
                    pos += n;
                }
                result.rank = rank;
                result.witness = std::move(witness);
                return result;
            }
            std::size_t k = rank;
            while (k > 0 && digits[k - 1] == columns - 1) --k;
            if (k == 0) break;
            dirty = k - 1;
            ++digits[dirty];
            for (std::size_t j = k; j < rank; ++j) digits[j] = digits[dirty];
        }
    }
    return result;
}

} // namespace

OracleResult<PrimeField> oracle_rank(const Tensor<PrimeField>& t, std::size_t max_rank) {
    return oracle_generic(t, max_rank);
}

OracleResult<BorderRing> oracle_border_rank(const Tensor<BorderRing>& t, std::size_t max_rank) {
    return oracle_generic(t, max_rank);
}

} // namespace tcpd
