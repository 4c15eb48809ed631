#pragma once

// Traversals of the semigroup tree up to a target genus gamma.
//
//  * complete mode visits every semigroup of genus <= gamma;
//  * unleaved visiting mode visits the subtree of nodes that still have a
//    descendant of genus gamma (the unleaved tree);
//  * unleaved counting mode only counts the genus-gamma semigroups, trimming
//    hopeless branches, skipping siblings known to be hopeless and replacing
//    whole regions by closed forms.

#include "nsg/shrink_encoding.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace nsg {

struct ExplorationStats {
    std::uint64_t leaf_count = 0;    ///< semigroups of genus exactly gamma
    std::uint64_t visited_nodes = 0; ///< complete mode: nodes visited; unleaved: nodes of the unleaved tree
    std::uint64_t encoded_nodes = 0; ///< shrink encodings materialized by parent/sibling transfers
    std::uint64_t trimmed_nodes = 0; ///< encoded nodes discarded by the trimming criterion

    /// Componentwise sum; throws OverflowError instead of wrapping.
    ExplorationStats& operator+=(const ExplorationStats& other);

    friend bool operator==(const ExplorationStats&, const ExplorationStats&) = default;
};

/// a + b, throwing OverflowError on wrap.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

enum class TrimVerdict { KeepDescending, CountOneLeafAndStop, Trim };

TrimVerdict trim_verdict(const ShrinkEncoding& e, int gamma) noexcept;

/// What a visitor sees. `encoding` is null for ordinary semigroups, which
/// have no shrink encoding; it must not be retained past the callback.
struct NodeView {
    NodeContext ctx;
    const ShrinkEncoding* encoding = nullptr;
};

using Visitor = std::function<void(const NodeView&)>;

// ---- complete mode ---------------------------------------------------------

/// Visits a non-ordinary, non-pseudo-ordinary node and all its descendants of
/// genus <= gamma. ctx.efficacy must be the node's number of right generators.
ExplorationStats descend(const ShrinkEncoding& e, const NodeContext& ctx, int gamma, const Visitor& visit = {});

/// Visits P_{m,u} and its descendants except the branch through P_{m,u+1}.
ExplorationStats pseudo_descend(int m, int u, int gamma, const Visitor& visit = {});

/// Visits every semigroup of multiplicity m and genus <= gamma (1 <= m <= gamma+1).
ExplorationStats explore_multiplicity(int m, int gamma, const Visitor& visit = {});

ExplorationStats explore_tree(int gamma, const Visitor& visit = {});

/// A piece of the per-multiplicity work, so that subtrees can be explored
/// independently. Roots covers O_m (plus all of multiplicities 1, 2 and
/// gamma+1, and a pseudo-ordinary leaf closing a chain); PseudoChain(m,u) is
/// pseudo_descend(m,u); QuasiOrdinaryRoot(m,F) is the subtree of Q_{m,F}.
struct TreePart {
    enum class Kind { Roots, PseudoChain, QuasiOrdinaryRoot };
    Kind kind = Kind::Roots;
    int multiplicity = 1;
    int parameter = 0;
};

/// Jumps u for which the multiplicity-m exploration calls pseudo_descend.
std::vector<int> pseudo_chain_jumps(int m, int gamma);

/// Explores one part. In unleaved mode a trimmed quasi-ordinary root counts as
/// encoded and trimmed and contributes nothing else.
ExplorationStats explore_part(const TreePart& part, int gamma, bool unleaved);

// ---- unleaved visiting mode ------------------------------------------------

ExplorationStats descend_unleaved(const ShrinkEncoding& e, const NodeContext& ctx, int gamma,
                                  const Visitor& visit = {});
ExplorationStats pseudo_descend_unleaved(int m, int u, int gamma, const Visitor& visit = {});
ExplorationStats explore_multiplicity_unleaved(int m, int gamma, const Visitor& visit = {});

/// Visits every node of the unleaved tree of genus gamma.
ExplorationStats explore_unleaved_visit(int gamma, const Visitor& visit = {});

// ---- unleaved counting mode ------------------------------------------------

/// Called for every encoded node whose trimming verdict was evaluated.
using TrimObserver = std::function<void(const ShrinkEncoding&, const NodeContext&, TrimVerdict)>;

/// Number of genus-gamma descendants of a non-ordinary, non-pseudo-ordinary
/// node with genus <= gamma-2 that is known to survive trimming.
std::uint64_t descend_and_trim(const ShrinkEncoding& e, const NodeContext& ctx, int gamma,
                               ExplorationStats& stats, const TrimObserver* observer = nullptr);

/// Number of genus-gamma semigroups below P_{m,u} outside the P_{m,u+1}
/// branch. Requires m+u-1 <= gamma-2.
std::uint64_t pseudo_descend_and_trim(int m, int u, int gamma, ExplorationStats& stats,
                                      const TrimObserver* observer = nullptr);

/// Genus-gamma descendants of P_{m,gamma-m} (its grandchildren), plus the
/// unleaved-tree nodes of that subtree added to stats.visited_nodes.
std::uint64_t pseudo_ordinary_grandchildren_shortcut(int m, int gamma, ExplorationStats& stats);

/// One quasi-ordinary root Q_{m,F} of the counting exploration: counts 1 if
/// its shrinking has genus gamma, trims it if below, descends otherwise.
std::uint64_t quasi_ordinary_root_and_trim(int m, int frobenius, int gamma, ExplorationStats& stats,
                                           const TrimObserver* observer = nullptr);

struct UnleavedResult {
    std::uint64_t count = 0;
    ExplorationStats stats;
};

/// Counts the semigroups of genus gamma (gamma >= 8).
UnleavedResult explore_unleaved_tree(int gamma, const TrimObserver* observer = nullptr);

// ---- closed forms ----------------------------------------------------------

std::uint64_t grandchildren_of_pseudo_ordinary(int m, int u);

/// Genus-gamma semigroups of multiplicity 2 or 3.
std::uint64_t closed_form_low_multiplicity(int gamma);

/// Genus-gamma semigroups of multiplicity >= gamma-3 (gamma >= 8).
std::uint64_t closed_form_high_multiplicity(int gamma);

/// Sum of the two closed forms; the initial value of the unleaved count.
std::uint64_t unleaved_seed_count(int gamma);

} // namespace nsg
