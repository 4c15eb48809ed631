#pragma once

#include "nsg/shrink_encoding.hpp"

namespace nsg::detail {

/// Produces the encodings of consecutive children of one parent, reusing the
/// predecessor sibling's encoding whenever that transfer applies (sibling has
/// omega 1 and did not remove the conductor) and falling back to the parent.
class SiblingChain {
public:
    SiblingChain(const ShrinkEncoding& parent, const NodeContext& ctx) : parent_(parent), ctx_(ctx) {}

    const ShrinkEncoding& next(int sigma) {
        if (prev_sigma_ < 0 || prev_sigma_ == ctx_.conductor || current_.omega() != 1)
            current_ = encoding_from_parent(parent_, ctx_, sigma);
        else
            current_ = encoding_from_predecessor_sibling(current_, ctx_, prev_sigma_, sigma);
        prev_sigma_ = sigma;
        return current_;
    }

private:
    const ShrinkEncoding& parent_;
    NodeContext ctx_;
    ShrinkEncoding current_;
    int prev_sigma_ = -1;
};

/// sigma + m is a right generator of the child, i.e. sigma was strong.
inline bool strong_in_child(const ShrinkEncoding& child, int sigma, int m) noexcept {
    const long next = static_cast<long>(sigma) + m;
    return next % child.omega() != 0 || !child.shrink_contains(next / child.omega());
}

inline NodeContext ordinary_context(int m) noexcept {
    // O_m: gaps 1..m-1, right generators m..2m-1
    return NodeContext{m - 1, m == 1 ? 0 : m, m, 1, m};
}

inline NodeContext pseudo_ordinary_context(int m, int u) noexcept {
    return NodeContext{m + u - 2, m + u, m, u, m - 1};
}

inline NodeContext quasi_ordinary_context(int m, int frobenius) noexcept {
    return NodeContext{m, frobenius + 1, m, 1, 2 * m - 1 - frobenius};
}

} // namespace nsg::detail
