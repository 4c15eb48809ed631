#include "nsg/errors.hpp"
#include "nsg/tree_walker.hpp"
#include "walker_detail.hpp"

#include <algorithm>
#include <string>

namespace nsg {
namespace {

class Counter {
public:
    Counter(int gamma, ExplorationStats& stats, const TrimObserver* observer)
        : gamma_(gamma), stats_(stats), observer_(observer) {}

    std::uint64_t descend(const ShrinkEncoding& e, const NodeContext& ctx) {
        if (ctx.genus > gamma_ - 2)
            throw PreconditionViolated("counting descent needs genus <= gamma-2, got " + std::to_string(ctx.genus));
        ++stats_.visited_nodes;
        if (ctx.genus == gamma_ - 2)
            return count_grandchildren(e, ctx);

        const int c = ctx.conductor;
        const int m = ctx.multiplicity;
        const int u = ctx.jump;
        detail::SiblingChain chain(e, ctx);
        std::uint64_t count = 0;
        bool keepgoing = true;
        int r = ctx.efficacy;
        int sigma = c;
        for (; keepgoing && sigma < c + u; ++sigma) {
            if (!is_right_generator(e, sigma))
                continue;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats_.encoded_nodes;
            const bool strong = sigma % e.omega() != 0 || detail::strong_in_child(child, sigma, m);
            const NodeContext child_ctx{ctx.genus + 1, sigma + 1, m, u, strong ? r : r - 1};
            keepgoing = visit_child(child, child_ctx, count);
            --r;
        }
        for (; keepgoing && r > 1; ++sigma) {
            if (!is_right_generator(e, sigma))
                continue;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats_.encoded_nodes;
            --r;
            keepgoing = visit_child(child, NodeContext{ctx.genus + 1, sigma + 1, m, u, r}, count);
        }
        return count;
    }

    std::uint64_t pseudo_descend(int m, int u) {
        const NodeContext ctx = detail::pseudo_ordinary_context(m, u);
        if (ctx.genus + 1 > gamma_ - 2)
            throw PreconditionViolated("pseudo-ordinary children must have genus <= gamma-2");
        ++stats_.visited_nodes;
        const ShrinkEncoding p = encode_pseudo_ordinary(m, u);
        const int c = ctx.conductor;
        detail::SiblingChain chain(p, ctx);
        std::uint64_t count = 0;
        bool keepgoing = true;
        int r = u == m ? m - 1 : m - 2;
        for (int sigma = c + 1; keepgoing && sigma <= c + m - 1; ++sigma) {
            if (sigma == 2 * m)
                continue;
            const bool strong = sigma < c + u;
            if (!strong && r <= 1)
                break;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats_.encoded_nodes;
            if (!strong)
                --r;
            keepgoing = visit_child(child, NodeContext{ctx.genus + 1, sigma + 1, m, u, r}, count);
            if (strong)
                --r;
        }
        return count;
    }

    std::uint64_t quasi_ordinary_roots(int m) {
        std::uint64_t count = 0;
        for (int frobenius = m + 2; frobenius <= 2 * m - 2; ++frobenius) {
            const long shrink_genus = interval_genus(m, frobenius - 1);
            count = checked_add(count, quasi_ordinary_root(m, frobenius));
            if (shrink_genus <= gamma_)
                break;
        }
        return count;
    }

    std::uint64_t quasi_ordinary_root(int m, int frobenius) {
        const long shrink_genus = interval_genus(m, frobenius - 1);
        if (shrink_genus < gamma_) {
            ++stats_.trimmed_nodes;
            return 0;
        }
        if (shrink_genus == gamma_)
            return 1;
        const ShrinkEncoding q = encode_quasi_ordinary(m, frobenius);
        ++stats_.encoded_nodes;
        return descend(q, detail::quasi_ordinary_context(m, frobenius));
    }

private:
    // Returns false when later siblings must be skipped.
    bool visit_child(const ShrinkEncoding& child, const NodeContext& ctx, std::uint64_t& count) {
        if (child.omega() != 1) {
            count = checked_add(count, descend(child, ctx));
            return true;
        }
        const TrimVerdict verdict = trim_verdict(child, gamma_);
        if (observer_ != nullptr)
            (*observer_)(child, ctx, verdict);
        switch (verdict) {
        case TrimVerdict::KeepDescending:
            count = checked_add(count, descend(child, ctx));
            return true;
        case TrimVerdict::CountOneLeafAndStop:
            count = checked_add(count, 1);
            return false;
        case TrimVerdict::Trim:
            ++stats_.trimmed_nodes;
            return false;
        }
        return false;
    }

    // Node of genus gamma-2: its genus-gamma descendants are its grandchildren,
    // and each child contributes its efficacy.
    std::uint64_t count_grandchildren(const ShrinkEncoding& e, const NodeContext& ctx) {
        const int c = ctx.conductor;
        const int m = ctx.multiplicity;
        detail::SiblingChain chain(e, ctx);
        std::uint64_t count = 0;
        int r = ctx.efficacy;
        for (int sigma = c; sigma < c + ctx.jump && r > 0; ++sigma) {
            if (!is_right_generator(e, sigma))
                continue;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats_.encoded_nodes;
            const bool strong = sigma % e.omega() != 0 || detail::strong_in_child(child, sigma, m);
            count += static_cast<std::uint64_t>(strong ? r : r - 1);
            --r;
        }
        while (r > 1) {
            --r;
            count += static_cast<std::uint64_t>(r);
        }
        return count;
    }

    int gamma_;
    ExplorationStats& stats_;
    const TrimObserver* observer_;
};

} // namespace

std::uint64_t descend_and_trim(const ShrinkEncoding& e, const NodeContext& ctx, int gamma, ExplorationStats& stats,
                               const TrimObserver* observer) {
    Counter counter(gamma, stats, observer);
    return counter.descend(e, ctx);
}

std::uint64_t pseudo_descend_and_trim(int m, int u, int gamma, ExplorationStats& stats, const TrimObserver* observer) {
    Counter counter(gamma, stats, observer);
    return counter.pseudo_descend(m, u);
}

std::uint64_t pseudo_ordinary_grandchildren_shortcut(int m, int gamma, ExplorationStats& stats) {
    ++stats.visited_nodes;
    return grandchildren_of_pseudo_ordinary(m, gamma - m);
}

std::uint64_t quasi_ordinary_root_and_trim(int m, int frobenius, int gamma, ExplorationStats& stats,
                                           const TrimObserver* observer) {
    if (m < 4 || frobenius < m + 2 || frobenius > 2 * m - 2)
        throw OutOfRange("quasi-ordinary root outside the counted range");
    Counter counter(gamma, stats, observer);
    return counter.quasi_ordinary_root(m, frobenius);
}

UnleavedResult explore_unleaved_tree(int gamma, const TrimObserver* observer) {
    if (gamma < 8)
        throw OutOfRange("unleaved counting needs genus >= 8, got " + std::to_string(gamma));
    UnleavedResult result;
    result.count = unleaved_seed_count(gamma);
    ExplorationStats& stats = result.stats;
    Counter counter(gamma, stats, observer);
    for (int m = 4; m <= gamma - 4; ++m) {
        ++stats.visited_nodes; // O_m
        const int min_u = std::min(m, gamma - m);
        for (int u = 2; u < min_u; ++u)
            result.count = checked_add(result.count, counter.pseudo_descend(m, u));
        if (min_u < gamma - m)
            result.count = checked_add(result.count, counter.pseudo_descend(m, m));
        else
            result.count = checked_add(result.count, pseudo_ordinary_grandchildren_shortcut(m, gamma, stats));
        result.count = checked_add(result.count, counter.quasi_ordinary_roots(m));
    }
    stats.leaf_count = result.count;
    return result;
}

} // namespace nsg
