#include "tcpd/axis_reduce.hpp"
#include "tcpd/enumerate.hpp"
#include "tcpd/search.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace tcpd {

namespace {

template <ScalarRing Ring>
struct DfsContext {
    explicit DfsContext(const SearchOptions& opts) : options(opts) {}

    const SearchOptions& options;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> children{0};
    std::mutex observer_mutex;

    void report(const NodeReport& node) {
        if (!options.node_observer) return;
        std::lock_guard lock(observer_mutex);
        options.node_observer(node);
    }
};

template <ScalarRing Ring>
struct NodeResult {
    std::optional<Cpd<Ring>> cpd;
    bool pruned = false;
};

/// Column tuple u_0..u_{D-1} from a flat vector of sum(r_d) ring elements.
template <ScalarRing Ring>
std::vector<std::vector<typename Ring::Elem>> split_tuple(std::span<const typename Ring::Elem> flat,
                                                          std::span<const std::size_t> ranks) {
    std::vector<std::vector<typename Ring::Elem>> out;
    std::size_t pos = 0;
    for (auto r : ranks) {
        out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                         flat.begin() + static_cast<std::ptrdiff_t>(pos + r));
        pos += r;
    }
    return out;
}

template <ScalarRing Ring>
bool all_zero(const Ring& ring, std::span<const typename Ring::Elem> v) {
    return std::all_of(v.begin(), v.end(), [&](const auto& e) { return ring.is_zero(e); });
}

/// Appends column u_d to child factor d and lifts through the node's reduction.
template <ScalarRing Ring>
Cpd<Ring> extend_and_lift(const AxisReduction<Ring>& red, Cpd<Ring> child,
                          const std::vector<std::vector<typename Ring::Elem>>& tuple) {
    const Ring& ring = red.reduced.ring();
    for (std::size_t d = 0; d < tuple.size(); ++d)
        child.factors[d] = hcat(child.factors[d], column_matrix<Ring>(ring, tuple[d]));
    return lift_cpd(red, child);
}

template <ScalarRing Ring>
NodeResult<Ring> dfs_node(DfsContext<Ring>& ctx, const Tensor<Ring>& t, std::size_t budget, std::size_t depth) {
    ctx.nodes.fetch_add(1, std::memory_order_relaxed);
    const Ring& ring = t.ring();
    const auto red = reduce_axes(t);
    const auto& ranks = red.axis_ranks;
    NodeReport report{depth, budget, ranks, false, 0, false};
    if (std::any_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r > budget; })) {
        report.pruned = true;
        ctx.report(report);
        return {std::nullopt, true};
    }
    if (std::any_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; })) {
        report.found = true;
        ctx.report(report);
        return {Cpd<Ring>::empty(ring, t.shape()), false};
    }
    std::size_t width = 0;
    for (auto r : ranks) width += r;
    VectorEnumerator<Ring> tuples(ring, width);
    NodeResult<Ring> result;
    do {
        if (ctx.stop.load(std::memory_order_relaxed)) break;
        const auto flat = tuples.current();
        if (ctx.options.skip_zero_column && all_zero(ring, flat)) continue;
        ++report.children;
        const auto tuple = split_tuple<Ring>(flat, ranks);
        const auto child_tensor = tensor_sub(red.reduced, outer(ring, tuple));
        auto child = dfs_node(ctx, child_tensor, budget - 1, depth + 1);
        if (child.cpd) {
            result.cpd = extend_and_lift(red, std::move(*child.cpd), tuple);
            break;
        }
    } while (tuples.next());
    ctx.children.fetch_add(report.children, std::memory_order_relaxed);
    report.found = result.cpd.has_value();
    ctx.report(report);
    return result;
}

template <ScalarRing Ring>
SearchOutcome<Ring> dfs_root(const Tensor<Ring>& target, std::size_t budget, const SearchOptions& options) {
    const Ring& ring = target.ring();
    DfsContext<Ring> ctx(options);
    SearchOutcome<Ring> out;
    ctx.nodes.fetch_add(1);
    const auto red = reduce_axes(target);
    const auto& ranks = red.axis_ranks;
    out.stats.axis_ranks = ranks;
    NodeReport report{0, budget, ranks, false, 0, false};

    auto finish = [&] {
        out.stats.nodes = ctx.nodes.load();
        out.stats.children = ctx.children.load();
        if (out.certificate) verify_certificate(target, *out.certificate, budget);
        report.found = out.certificate.has_value();
        ctx.report(report);
        return std::move(out);
    };

    if (std::any_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r > budget; })) {
        out.stats.pruned = report.pruned = true;
        return finish();
    }
    if (std::any_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; })) {
        out.certificate = Cpd<Ring>::empty(ring, target.shape());
        return finish();
    }

    std::size_t width = 0;
    for (auto r : ranks) width += r;
    const std::uint64_t total = saturating_pow(ring.size(), width);
    std::atomic<std::uint64_t> branches{0}, recursed{0}, done{0};
    std::mutex mutex;

    detail::run_partitioned(total, options.threads, ctx.stop, [&](std::uint64_t begin, std::uint64_t end) {
        VectorEnumerator<Ring> tuples(ring, width, begin);
        std::uint64_t local_branches = 0, local_recursed = 0;
        for (std::uint64_t index = begin; index < end; ++index, tuples.next()) {
            if (ctx.stop.load(std::memory_order_relaxed)) break;
            const auto flat = tuples.current();
            if (!(options.skip_zero_column && all_zero(ring, flat))) {
                ++local_branches;
                const auto tuple = split_tuple<Ring>(flat, ranks);
                auto child = dfs_node(ctx, tensor_sub(red.reduced, outer(ring, tuple)), budget - 1, 1);
                if (!child.pruned) ++local_recursed;
                if (child.cpd) {
                    auto cpd = extend_and_lift(red, std::move(*child.cpd), tuple);
                    std::lock_guard lock(mutex);
                    if (!out.certificate) out.certificate = std::move(cpd);
                    ctx.stop.store(true);
                    break;
                }
            }
            const auto n = done.fetch_add(1) + 1;
            if (options.progress && options.progress_interval > 0 && n % options.progress_interval == 0) {
                std::lock_guard lock(mutex);
                options.progress(n, total);
            }
        }
        branches.fetch_add(local_branches);
        recursed.fetch_add(local_recursed);
    });

    report.children = branches.load();
    ctx.children.fetch_add(report.children);
    out.stats.root_branches = report.children;
    out.stats.root_children_recursed = recursed.load();
    if (options.progress) options.progress(done.load(), total);
    return finish();
}

} // namespace

SearchOutcome<PrimeField> dfs_search(const Tensor<PrimeField>& target, std::size_t max_rank,
                                     const SearchOptions& options) {
    return dfs_root(target, max_rank, options);
}

SearchOutcome<BorderRing> border_dfs(const Tensor<BorderRing>& target, std::size_t max_rank,
                                     const SearchOptions& options) {
    return dfs_root(target, max_rank, options);
}

BorderRankResult min_border_rank(const Tensor<BorderRing>& target, std::size_t max_rank,
                                 const SearchOptions& options) {
    BorderRankResult result;
    for (std::size_t r = 0; r <= max_rank; ++r) {
        auto outcome = border_dfs(target, r, options);
        result.stats = outcome.stats;
        if (outcome.certificate) {
            result.rank = r;
            result.certificate = std::move(outcome.certificate);
            break;
        }
    }
    return result;
}

BorderRankResult border_rank_at(const Tensor<PrimeField>& target, int exponent, std::size_t max_rank,
                                const SearchOptions& options) {
    const BorderRing ring(target.ring(), exponent);
    return min_border_rank(embed_scaled(target, ring, exponent - 1), max_rank, options);
}

} // namespace tcpd
