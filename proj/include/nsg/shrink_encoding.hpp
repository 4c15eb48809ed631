#pragma once

// Encoding of a numerical semigroup by the gcd of its left elements (omega)
// together with its shrinking: the monoid generated by the left elements
// divided by omega. With the conductor c it determines the semigroup:
//     L = omega * shrink  U  [c, inf).

#include "nsg/bits.hpp"
#include "nsg/semigroup.hpp"

#include <cstdint>

namespace nsg {

/// Traversal scalars carried next to an encoding.
struct NodeContext {
    int genus = 0;
    int conductor = 0;
    int multiplicity = 1;
    int jump = 1;
    int efficacy = 0; ///< number of right generators still in scope
};

class ShrinkEncoding {
public:
    /// omega = 1, shrink = N0.
    ShrinkEncoding() : ShrinkEncoding(1, Bits{}) {}

    /// `window` holds shrink membership on [0, window.size()); every integer
    /// from window.size() on must be a member. The window is cut down to the
    /// actual conductor.
    ShrinkEncoding(int omega, Bits window);

    int omega() const noexcept { return omega_; }
    int shrink_conductor() const noexcept { return conductor_; }
    int shrink_genus() const noexcept { return genus_; }

    bool shrink_contains(long x) const noexcept {
        return x >= conductor_ || (x >= 0 && bits_.test(static_cast<std::size_t>(x)));
    }

    /// Membership test for the encoded semigroup below its conductor.
    bool contains_left(long x) const noexcept { return x % omega_ == 0 && shrink_contains(x / omega_); }

    /// Shrink membership on [0, shrink_conductor()).
    const Bits& shrink_bits() const noexcept { return bits_; }

    friend bool operator==(const ShrinkEncoding& a, const ShrinkEncoding& b) noexcept {
        return a.omega_ == b.omega_ && a.conductor_ == b.conductor_ && a.bits_ == b.bits_;
    }

private:
    Bits bits_;
    int omega_ = 1;
    int conductor_ = 0;
    int genus_ = 0;
};

/// Right-generator test, no range check. Valid for c <= sigma <= c+m-1.
inline bool is_right_generator(const ShrinkEncoding& e, int sigma) noexcept {
    return sigma % e.omega() != 0 || !e.shrink_contains(sigma / e.omega());
}

/// Throws OutOfRange when sigma is outside [c, c+m-1].
bool check_right_generator(const ShrinkEncoding& e, const NodeContext& ctx, int sigma);

/// `child` is the encoding of the semigroup with sigma removed; `case_a` says
/// sigma is not a multiple of the parent's omega. A generator at or above
/// c+u is never strong.
bool check_strong_generator(const ShrinkEncoding& child, const NodeContext& ctx, int sigma, bool case_a);

/// Encoding of (parent \ {sigma}) from the parent's encoding.
ShrinkEncoding encoding_from_parent(const ShrinkEncoding& e, const NodeContext& ctx, int sigma);

/// Encoding of (parent \ {sigma}) from the encoding of (parent \ {sigma_prev}),
/// sigma_prev being the preceding right generator. Throws PreconditionViolated
/// unless that sibling has omega 1 and sigma_prev != c.
ShrinkEncoding encoding_from_predecessor_sibling(const ShrinkEncoding& prev, const NodeContext& ctx,
                                                 int sigma_prev, int sigma);

/// Upper bounds on the shrink conductor produced by the two transfers.
long parent_transfer_conductor_bound(const ShrinkEncoding& e, const NodeContext& ctx, int sigma);
long sibling_transfer_conductor_bound(const ShrinkEncoding& prev);

/// Conductor and genus of the semigroup generated by {i, ..., j}, 2 <= i < j.
long interval_conductor(int i, int j);
long interval_genus(int i, int j);

/// P_{m,u}: gaps 1..m-1 and m+1..m+u-1. Requires 2 <= u <= m.
ShrinkEncoding encode_pseudo_ordinary(int m, int u);

/// Q_{m,F}: gaps 1..m-1 and F. Requires m+1 <= F <= 2m-1.
ShrinkEncoding encode_quasi_ordinary(int m, int frobenius);

/// Rebuilds omega * shrink U [conductor, inf).
CanonicalSemigroup reconstruct(const ShrinkEncoding& e, int conductor);

/// Encoding of a non-ordinary semigroup computed through the oracle.
ShrinkEncoding encoding_of(const CanonicalSemigroup& s);

} // namespace nsg
