#pragma once

#include "tcpd/tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tcpd {

/// One finished node of a depth-first search.
struct NodeReport {
    std::size_t depth = 0;
    std::size_t rank_budget = 0;
    std::span<const std::size_t> axis_ranks;
    bool pruned = false;
    /// Child column tuples enumerated at this node.
    std::uint64_t children = 0;
    bool found = false;
};

struct SearchOptions {
    /// Worker threads. With more than one, any valid certificate may be returned.
    unsigned threads = 1;
    /// Called with (units done, units total) every progress_interval units.
    /// Units are tail assignments (rref search) or root child tuples (DFS).
    std::function<void(std::uint64_t, std::uint64_t)> progress;
    std::uint64_t progress_interval = 1u << 14;
    /// DFS only: skip the all-zeros column tuple, whose child repeats the parent.
    bool skip_zero_column = false;
    /// DFS only: called once per node. Serialized across threads.
    std::function<void(const NodeReport&)> node_observer;
};

struct SearchStats {
    /// Axis-ranks of the target (in original axis order).
    std::vector<std::size_t> axis_ranks;
    /// True when the target was rejected because some axis-rank exceeds R.
    bool pruned = false;

    // rref search
    std::uint64_t tail_assignments_total = 0;
    std::uint64_t tail_assignments_processed = 0;
    /// (tail assignment, row vector v) pairs inspected.
    std::uint64_t pairs_inspected = 0;

    // depth-first search
    std::uint64_t nodes = 0;
    std::uint64_t children = 0;
    std::uint64_t root_branches = 0;
    /// Root children that passed their own axis-rank prune.
    std::uint64_t root_children_recursed = 0;
};

/// Found(certificate) or Exhausted.
template <ScalarRing Ring>
struct SearchOutcome {
    std::optional<Cpd<Ring>> certificate;
    SearchStats stats;

    bool found() const noexcept { return certificate.has_value(); }
    bool exhausted() const noexcept { return !certificate.has_value(); }
};

/// Decides whether `target` has a CPD with at most `max_rank` columns by
/// fixing the R - r_0 tail columns and solving for the basis rows Q.
SearchOutcome<PrimeField> rref_search(const Tensor<PrimeField>& target, std::size_t max_rank,
                                      const SearchOptions& options = {});

/// Core of rref_search. `reduced` must be axis-reduced with axis 0 of
/// maximal length r_0 <= max_rank and order >= 2. Returns factors for
/// `reduced` itself.
SearchOutcome<PrimeField> rref_search_help(const Tensor<PrimeField>& reduced, std::size_t max_rank,
                                           const SearchOptions& options = {});

/// Column-by-column depth-first search over a field.
SearchOutcome<PrimeField> dfs_search(const Tensor<PrimeField>& target, std::size_t max_rank,
                                     const SearchOptions& options = {});

/// Column-by-column depth-first search over F[x]/(x^H).
SearchOutcome<BorderRing> border_dfs(const Tensor<BorderRing>& target, std::size_t max_rank,
                                     const SearchOptions& options = {});

struct BorderRankResult {
    /// Smallest R <= max_rank with a CPD of x^{H-1} T, if any.
    std::optional<std::size_t> rank;
    std::optional<Cpd<BorderRing>> certificate;
    /// Stats of the last border_dfs call.
    SearchStats stats;
};

/// Border rank at exponent H: ascending scan R = 0, 1, ... of border_dfs on x^{H-1} T.
BorderRankResult border_rank_at(const Tensor<PrimeField>& target, int exponent, std::size_t max_rank,
                                const SearchOptions& options = {});

/// Same scan on a tensor that already lives in the border ring.
BorderRankResult min_border_rank(const Tensor<BorderRing>& target, std::size_t max_rank,
                                 const SearchOptions& options = {});

/// Throws VerificationFailure unless cpd evaluates to target with <= max_rank columns.
template <ScalarRing Ring>
void verify_certificate(const Tensor<Ring>& target, const Cpd<Ring>& cpd, std::size_t max_rank) {
    if (cpd.rank() > max_rank)
        throw VerificationFailure("certificate has " + std::to_string(cpd.rank()) + " columns, budget " +
                                  std::to_string(max_rank));
    if (cpd.shape() != target.shape())
        throw VerificationFailure("certificate shape " + shape_string(cpd.shape()) + " differs from target " +
                                  shape_string(target.shape()));
    if (!(cpd_eval(cpd) == target)) throw VerificationFailure("certificate does not evaluate to the target");
}

} // namespace tcpd
