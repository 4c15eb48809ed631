#pragma once

// Explicit-membership numerical semigroups. Everything here is deliberately
// unoptimized: it is the ground truth the encoded walkers are checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace nsg {

class CanonicalSemigroup {
public:
    /// The trivial semigroup N0 (no gaps).
    CanonicalSemigroup();

    /// Builds the semigroup whose elements below `conductor` are exactly the
    /// indices flagged in `below_conductor` (size must equal `conductor`).
    /// Closure is not checked here; see from_gaps.
    static CanonicalSemigroup from_prefix(std::vector<std::uint8_t> below_conductor);

    bool contains(long x) const noexcept {
        if (x < 0)
            return false;
        if (x >= conductor_)
            return true;
        return membership_[static_cast<std::size_t>(x)] != 0;
    }

    int conductor() const noexcept { return conductor_; }
    int frobenius() const noexcept { return conductor_ - 1; }
    int genus() const noexcept { return genus_; }
    int multiplicity() const noexcept { return multiplicity_; }
    int jump() const noexcept { return jump_; }

    /// Membership flags over 0..conductor+multiplicity-1.
    const std::vector<std::uint8_t>& membership() const noexcept { return membership_; }

    std::vector<int> gaps() const;
    /// Elements smaller than the Frobenius number.
    std::vector<int> left_elements() const;

    bool is_ordinary() const noexcept { return genus_ + 1 == conductor_ || conductor_ == 0; }

    friend bool operator==(const CanonicalSemigroup& a, const CanonicalSemigroup& b) {
        return a.conductor_ == b.conductor_ && a.membership_ == b.membership_;
    }

private:
    std::vector<std::uint8_t> membership_;
    int conductor_ = 0;
    int genus_ = 0;
    int multiplicity_ = 1;
    int jump_ = 1;
};

/// Throws ClosureViolation if the complement of `gaps` is not additively
/// closed, OutOfRange for non-positive entries.
CanonicalSemigroup from_gaps(std::span<const int> gaps);

/// The numerical semigroup generated by `generators` (gcd must be 1).
CanonicalSemigroup generated_by(std::span<const int> generators);

std::vector<int> minimal_generators(const CanonicalSemigroup& s);

/// Minimal generators larger than the Frobenius number, ascending.
std::vector<int> right_generators(const CanonicalSemigroup& s);

struct OmegaShrink {
    /// gcd of the left elements; 0 when the only left element is 0 (or none).
    int omega = 0;
    /// Left elements divided by omega, closed under addition. Empty when omega is 0.
    std::optional<CanonicalSemigroup> shrink;
};

OmegaShrink omega_and_shrink(const CanonicalSemigroup& s);

/// s \ {sigma}; sigma must be a right generator of s.
CanonicalSemigroup remove_generator(const CanonicalSemigroup& s, int sigma);

/// One child per right generator, ordered by increasing removed generator.
std::vector<CanonicalSemigroup> oracle_children(const CanonicalSemigroup& s);

/// Depth-first walk of the tree from `root` down to genus `max_genus`,
/// calling `visit` on every node (root included). Throws ResourceLimit once
/// more than `node_budget` nodes have been produced.
void oracle_walk(const CanonicalSemigroup& root, int max_genus,
                 const std::function<void(const CanonicalSemigroup&)>& visit,
                 std::uint64_t node_budget);

struct OracleCount {
    std::uint64_t count = 0;          // semigroups of genus exactly gamma
    std::uint64_t complete_nodes = 0; // semigroups of genus <= gamma
};

/// Node budget from NSG_ORACLE_NODE_BUDGET, or a 50M default.
std::uint64_t default_oracle_node_budget();

OracleCount oracle_count(int gamma);
OracleCount oracle_count(int gamma, std::uint64_t node_budget);

} // namespace nsg
