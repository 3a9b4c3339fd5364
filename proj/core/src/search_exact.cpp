#include "tcpd/axis_reduce.hpp"
#include "tcpd/enumerate.hpp"
#include "tcpd/linalg.hpp"
#include "tcpd/rank1.hpp"
#include "tcpd/search.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <mutex>

namespace tcpd {

namespace {

using Elem = PrimeField::Elem;

/// Shared state of one rref_search_help call.
struct HelpContext {
    HelpContext(const Tensor<PrimeField>& t, std::size_t budget, const SearchOptions& opts, std::size_t tail)
        : tensor(t), max_rank(budget), options(opts), tail_cols(tail) {}

    const Tensor<PrimeField>& tensor;
    std::size_t max_rank;
    const SearchOptions& options;
    std::size_t tail_cols;
    std::uint64_t total = 0;

    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> processed{0};
    std::atomic<std::uint64_t> pairs{0};
    std::mutex mutex;
    std::optional<Cpd<PrimeField>> result;
    std::uint64_t next_report = 0;
};

/// Digits of a tail assignment: V_0 row-major, then V_1, ...; V_d is r_d x tail_cols.
Cpd<PrimeField> tail_from_digits(const PrimeField& field, std::span<const std::size_t> ranks, std::size_t tail_cols,
                                 std::span<const std::uint64_t> digits) {
    Cpd<PrimeField> tail;
    std::size_t pos = 0;
    for (auto r : ranks) {
        Matrix<PrimeField> v(field, r, tail_cols);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < tail_cols; ++j) v(i, j) = field.element(digits[pos++]);
        tail.factors.push_back(std::move(v));
    }
    return tail;
}

template <class Basis>
void help_worker(HelpContext& ctx, Basis basis, std::uint64_t begin, std::uint64_t end) {
    const Tensor<PrimeField>& t = ctx.tensor;
    const PrimeField& field = t.ring();
    const auto& shape = t.shape();
    const std::size_t r0 = shape[0];
    const std::span<const std::size_t> slice_shape(shape.data() + 1, shape.size() - 1);
    const std::size_t slice_size = shape_volume(slice_shape);
    std::size_t factor_len = 0;
    for (auto n : slice_shape) factor_len += n;
    std::size_t digit_count = 0;
    for (auto n : shape) digit_count += n * ctx.tail_cols;

    std::vector<Elem> residual(t.size());
    std::vector<Elem> slice(slice_size);
    std::vector<Elem> factors(factor_len);
    std::vector<std::vector<Elem>> q_rows;
    std::vector<std::vector<Elem>> u_cols;  // concatenated axis 1..D-1 vectors per nonzero slice
    std::vector<std::size_t> u_pos;         // basis position x of each stored column

    Odometer tails(field.size(), digit_count, begin);
    std::uint64_t local_pairs = 0;
    for (std::uint64_t index = begin; index < end; ++index) {
        if (ctx.stop.load(std::memory_order_relaxed)) break;
        const auto tail = tail_from_digits(field, shape, ctx.tail_cols, tails.digits());
        const auto tail_sum = cpd_eval(tail);
        for (std::size_t i = 0; i < t.size(); ++i) residual[i] = field.sub(t[i], tail_sum[i]);

        basis.clear();
        q_rows.clear();
        u_cols.clear();
        u_pos.clear();
        VectorEnumerator<PrimeField> rows(field, r0);
        bool complete = false;
        do {
            ++local_pairs;
            const auto v = rows.current();
            std::fill(slice.begin(), slice.end(), 0);
            for (std::size_t i = 0; i < r0; ++i) {
                if (v[i] == 0) continue;
                const Elem* slab = residual.data() + i * slice_size;
                for (std::size_t k = 0; k < slice_size; ++k) slice[k] = field.add(slice[k], field.mul(v[i], slab[k]));
            }
            if (!rank1_factors(field, slice_shape, slice, factors)) continue;
            if (!basis.insert(v)) continue;
            const bool nonzero = std::any_of(slice.begin(), slice.end(), [](Elem e) { return e != 0; });
            if (nonzero) {
                u_cols.emplace_back(factors.begin(), factors.end());
                u_pos.push_back(q_rows.size());
            }
            q_rows.emplace_back(v.begin(), v.end());
            if (q_rows.size() == r0) {
                complete = true;
                break;
            }
        } while (rows.next());

        if (complete) {
            // Post-hoc check of the basis condition on every accepted row.
            for (const auto& q_row : q_rows) {
                std::fill(slice.begin(), slice.end(), 0);
                for (std::size_t i = 0; i < r0; ++i) {
                    const Elem* slab = residual.data() + i * slice_size;
                    for (std::size_t k = 0; k < slice_size; ++k)
                        slice[k] = field.add(slice[k], field.mul(q_row[i], slab[k]));
                }
                if (!rank1_factors(field, slice_shape, slice, factors))
                    throw VerificationFailure("accepted basis row has a slice of rank > 1");
            }
            const auto q = Matrix<PrimeField>::from_rows(field, q_rows);
            const auto q_inv = invert(q);
            if (!q_inv) throw VerificationFailure("accepted basis rows are dependent");
            const std::size_t k = u_cols.size();
            Cpd<PrimeField> cpd;
            Matrix<PrimeField> u0(field, r0, k);
            for (std::size_t c = 0; c < k; ++c) u0(u_pos[c], c) = field.one();
            cpd.factors.push_back(hcat(multiply(*q_inv, u0), tail.factors[0]));
            std::size_t offset = 0;
            for (std::size_t d = 1; d < shape.size(); ++d) {
                Matrix<PrimeField> ud(field, shape[d], k);
                for (std::size_t c = 0; c < k; ++c)
                    for (std::size_t i = 0; i < shape[d]; ++i) ud(i, c) = u_cols[c][offset + i];
                offset += shape[d];
                cpd.factors.push_back(hcat(ud, tail.factors[d]));
            }
            verify_certificate(t, cpd, ctx.max_rank);
            std::lock_guard lock(ctx.mutex);
            if (!ctx.result) ctx.result = std::move(cpd);
            ctx.stop.store(true);
            break;
        }

        const auto done = ctx.processed.fetch_add(1) + 1;
        if (ctx.options.progress && ctx.options.progress_interval > 0 && done % ctx.options.progress_interval == 0) {
            std::lock_guard lock(ctx.mutex);
            ctx.options.progress(done, ctx.total);
        }
        tails.next();
    }
    ctx.pairs.fetch_add(local_pairs);
}

} // namespace

SearchOutcome<PrimeField> rref_search_help(const Tensor<PrimeField>& reduced, std::size_t max_rank,
                                           const SearchOptions& options) {
    const auto& shape = reduced.shape();
    if (shape.size() < 2) throw InvalidArgument("rref_search_help needs a tensor with at least two axes");
    const std::size_t r0 = shape[0];
    if (*std::max_element(shape.begin(), shape.end()) != r0)
        throw InvalidArgument("rref_search_help: axis 0 must be the longest axis");
    if (r0 > max_rank) throw InvalidArgument("rref_search_help: axis 0 longer than the rank budget");
    if (shape.size() > 17) throw InvalidArgument("rref_search_help supports at most 17 axes");

    const PrimeField& field = reduced.ring();
    HelpContext ctx(reduced, max_rank, options, max_rank - r0);
    std::size_t digit_count = 0;
    for (auto n : shape) digit_count += n * ctx.tail_cols;
    ctx.total = saturating_pow(field.size(), digit_count);

    detail::run_partitioned(ctx.total, options.threads, ctx.stop, [&](std::uint64_t begin, std::uint64_t end) {
        if (field.modulus() == 2)
            help_worker(ctx, Gf2RowSpanBasis(r0), begin, end);
        else
            help_worker(ctx, RowSpanBasis(field, r0), begin, end);
    });

    SearchOutcome<PrimeField> out;
    out.certificate = std::move(ctx.result);
    out.stats.axis_ranks = shape;
    out.stats.tail_assignments_total = ctx.total;
    out.stats.tail_assignments_processed = ctx.processed.load();
    out.stats.pairs_inspected = ctx.pairs.load();
    if (options.progress) options.progress(out.stats.tail_assignments_processed, ctx.total);
    return out;
}

SearchOutcome<PrimeField> rref_search(const Tensor<PrimeField>& target, std::size_t max_rank,
                                      const SearchOptions& options) {
    const PrimeField& field = target.ring();
    const auto red = axis_reduce(target);
    SearchOutcome<PrimeField> out;
    out.stats.axis_ranks = red.axis_ranks;
    const auto& ranks = red.axis_ranks;
    if (std::any_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r > max_rank; })) {
        out.stats.pruned = true;
        return out;
    }
    if (std::any_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; })) {
        out.certificate = Cpd<PrimeField>::empty(field, target.shape());
        verify_certificate(target, *out.certificate, max_rank);
        return out;
    }
    if (target.order() == 1) {
        out.certificate = try_rank1(target);
        verify_certificate(target, *out.certificate, max_rank);
        return out;
    }

    const std::size_t widest = static_cast<std::size_t>(std::max_element(ranks.begin(), ranks.end()) - ranks.begin());
    auto inner = rref_search_help(swap_axes(red.reduced, 0, widest), max_rank, options);
    out.stats.tail_assignments_total = inner.stats.tail_assignments_total;
    out.stats.tail_assignments_processed = inner.stats.tail_assignments_processed;
    out.stats.pairs_inspected = inner.stats.pairs_inspected;
    if (!inner.certificate) return out;

    auto factors = std::move(*inner.certificate);
    std::swap(factors.factors[0], factors.factors[widest]);
    out.certificate = lift_cpd(red, factors);
    verify_certificate(target, *out.certificate, max_rank);
    return out;
}

} // namespace tcpd
