#include "nsg/tree_walker.hpp"

#include "nsg/errors.hpp"
#include "walker_detail.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace nsg {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit counter overflow");
    return out;
}

ExplorationStats& ExplorationStats::operator+=(const ExplorationStats& other) {
    leaf_count = checked_add(leaf_count, other.leaf_count);
    visited_nodes = checked_add(visited_nodes, other.visited_nodes);
    encoded_nodes = checked_add(encoded_nodes, other.encoded_nodes);
    trimmed_nodes = checked_add(trimmed_nodes, other.trimmed_nodes);
    return *this;
}

TrimVerdict trim_verdict(const ShrinkEncoding& e, int gamma) noexcept {
    if (e.omega() != 1 || e.shrink_genus() > gamma)
        return TrimVerdict::KeepDescending;
    return e.shrink_genus() == gamma ? TrimVerdict::CountOneLeafAndStop : TrimVerdict::Trim;
}

namespace {

/// Visiting traversal. With Trim set, children that have no descendant of
/// genus gamma are dropped together with every later sibling.
template <bool Trim>
class Walker {
public:
    Walker(int gamma, const Visitor& visit) : gamma_(gamma), visit_(visit ? &visit : nullptr) {
        if (gamma < 0)
            throw OutOfRange("genus must be non-negative");
    }

    ExplorationStats stats;

    void descend(const ShrinkEncoding& e, const NodeContext& ctx) {
        on_node(ctx, &e);
        if (ctx.genus >= gamma_)
            return;
        const int c = ctx.conductor;
        const int m = ctx.multiplicity;
        const int u = ctx.jump;
        detail::SiblingChain chain(e, ctx);
        int r = ctx.efficacy;
        int sigma = c;
        for (; sigma < c + u; ++sigma) { // strong generators may occur here
            if (!is_right_generator(e, sigma))
                continue;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats.encoded_nodes;
            if (!survives(child))
                return;
            const bool strong = sigma % e.omega() != 0 || detail::strong_in_child(child, sigma, m);
            descend(child, NodeContext{ctx.genus + 1, sigma + 1, m, u, strong ? r : r - 1});
            --r;
        }
        for (; r > 0; ++sigma) { // no more strong generators
            if (!is_right_generator(e, sigma))
                continue;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats.encoded_nodes;
            --r;
            if (!survives(child))
                return;
            descend(child, NodeContext{ctx.genus + 1, sigma + 1, m, u, r});
        }
    }

    void pseudo_descend(int m, int u) {
        const ShrinkEncoding p = encode_pseudo_ordinary(m, u);
        const NodeContext ctx = detail::pseudo_ordinary_context(m, u);
        on_node(ctx, &p);
        if (ctx.genus >= gamma_)
            return;
        const int c = ctx.conductor;
        // every integer in [c, c+m-1] but 2m is a right generator, strong
        // exactly below c+u; the one at c leads to P_{m,u+1} and is skipped
        int r = u == m ? m - 1 : m - 2;
        detail::SiblingChain chain(p, ctx);
        for (int sigma = c + 1; sigma <= c + m - 1; ++sigma) {
            if (sigma == 2 * m)
                continue;
            const ShrinkEncoding& child = chain.next(sigma);
            ++stats.encoded_nodes;
            const bool strong = sigma < c + u;
            if (!strong)
                --r;
            if (!survives(child))
                return;
            descend(child, NodeContext{ctx.genus + 1, sigma + 1, m, u, r});
            if (strong)
                --r;
        }
    }

    void multiplicity(int m) {
        roots(m);
        if (m <= 2 || m == gamma_ + 1)
            return;
        for (int u : pseudo_chain_jumps(m, gamma_))
            pseudo_descend(m, u);
        for (int frobenius = m + 2; frobenius <= 2 * m - 1; ++frobenius)
            if (!quasi_root(m, frobenius))
                break;
    }

    // O_m, the whole of multiplicities 1 and 2 and gamma+1, and the
    // pseudo-ordinary leaf that ends a chain cut by the genus bound.
    void roots(int m) {
        if (m < 1 || m > gamma_ + 1)
            throw OutOfRange("multiplicity " + std::to_string(m) + " outside [1, gamma+1]");
        on_node(detail::ordinary_context(m), nullptr);
        if (m == 2) {
            // hyperelliptic chain H_g = <2, 2g+1>; H_1 is ordinary
            const ShrinkEncoding h(2, Bits{});
            for (int g = 2; g <= gamma_; ++g)
                on_node(NodeContext{g, 2 * g, 2, 2, 1}, &h);
        }
        if (m <= 2 || m == gamma_ + 1)
            return;
        const int min_u = std::min(m, gamma_ + 2 - m);
        if (min_u >= gamma_ + 2 - m) {
            const ShrinkEncoding p = encode_pseudo_ordinary(m, min_u);
            on_node(detail::pseudo_ordinary_context(m, min_u), &p);
        }
    }

    // Returns false when Q_{m,F} was trimmed, so that later roots are skipped.
    bool quasi_root(int m, int frobenius) {
        const ShrinkEncoding q = encode_quasi_ordinary(m, frobenius);
        ++stats.encoded_nodes;
        if (!survives(q))
            return false;
        descend(q, detail::quasi_ordinary_context(m, frobenius));
        return true;
    }

private:
    void on_node(const NodeContext& ctx, const ShrinkEncoding* e) {
        ++stats.visited_nodes;
        if (ctx.genus == gamma_)
            ++stats.leaf_count;
        if (visit_ != nullptr)
            (*visit_)(NodeView{ctx, e});
    }

    bool survives(const ShrinkEncoding& child) noexcept {
        if constexpr (Trim) {
            if (child.omega() == 1 && child.shrink_genus() < gamma_) {
                ++stats.trimmed_nodes;
                return false;
            }
        }
        return true;
    }

    int gamma_;
    const Visitor* visit_;
};

} // namespace

std::vector<int> pseudo_chain_jumps(int m, int gamma) {
    std::vector<int> out;
    if (m < 3 || m > gamma)
        return out;
    const int min_u = std::min(m, gamma + 2 - m);
    for (int u = 2; u < min_u; ++u)
        out.push_back(u);
    if (min_u < gamma + 2 - m)
        out.push_back(m);
    return out;
}

ExplorationStats explore_part(const TreePart& part, int gamma, bool unleaved) {
    auto run = [&](auto& w) {
        switch (part.kind) {
        case TreePart::Kind::Roots:
            w.roots(part.multiplicity);
            break;
        case TreePart::Kind::PseudoChain:
            w.pseudo_descend(part.multiplicity, part.parameter);
            break;
        case TreePart::Kind::QuasiOrdinaryRoot:
            w.quasi_root(part.multiplicity, part.parameter);
            break;
        }
        return w.stats;
    };
    if (unleaved) {
        Walker<true> w(gamma, {});
        return run(w);
    }
    Walker<false> w(gamma, {});
    return run(w);
}

ExplorationStats descend(const ShrinkEncoding& e, const NodeContext& ctx, int gamma, const Visitor& visit) {
    Walker<false> w(gamma, visit);
    w.descend(e, ctx);
    return w.stats;
}

ExplorationStats pseudo_descend(int m, int u, int gamma, const Visitor& visit) {
    Walker<false> w(gamma, visit);
    w.pseudo_descend(m, u);
    return w.stats;
}

ExplorationStats explore_multiplicity(int m, int gamma, const Visitor& visit) {
    Walker<false> w(gamma, visit);
    w.multiplicity(m);
    return w.stats;
}

ExplorationStats explore_tree(int gamma, const Visitor& visit) {
    Walker<false> w(gamma, visit);
    for (int m = 1; m <= gamma + 1; ++m)
        w.multiplicity(m);
    return w.stats;
}

ExplorationStats descend_unleaved(const ShrinkEncoding& e, const NodeContext& ctx, int gamma, const Visitor& visit) {
    Walker<true> w(gamma, visit);
    w.descend(e, ctx);
    return w.stats;
}

ExplorationStats pseudo_descend_unleaved(int m, int u, int gamma, const Visitor& visit) {
    Walker<true> w(gamma, visit);
    w.pseudo_descend(m, u);
    return w.stats;
}

ExplorationStats explore_multiplicity_unleaved(int m, int gamma, const Visitor& visit) {
    Walker<true> w(gamma, visit);
    w.multiplicity(m);
    return w.stats;
}

ExplorationStats explore_unleaved_visit(int gamma, const Visitor& visit) {
    Walker<true> w(gamma, visit);
    for (int m = 1; m <= gamma + 1; ++m)
        w.multiplicity(m);
    return w.stats;
}

} // namespace nsg
