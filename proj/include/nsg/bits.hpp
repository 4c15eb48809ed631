#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nsg {

/// Fixed-length bitset used for the finite window of a shrunk semigroup.
/// Bit x set means x is a member. Bits past size() are kept zero.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : words_((nbits + 63) / 64, 0), size_(nbits) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void set_range(std::size_t from, std::size_t to) noexcept;
    void reset() noexcept;

    std::span<std::uint64_t> words() noexcept { return words_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// *this |= *this << shift
    void shift_or(std::size_t shift) noexcept;
    /// *this |= src << shift (same size)
    void shift_or_from(const Bits& src, std::size_t shift) noexcept;
    void or_with(const Bits& other) noexcept;
    std::size_t count() const noexcept;

    /// One past the highest zero bit, or 0 when every bit is set.
    std::size_t one_past_last_zero() const noexcept;

    /// Keeps the low `nbits` bits.
    void truncate(std::size_t nbits);

    friend bool operator==(const Bits& a, const Bits& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void clear_tail() noexcept;

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// s <- s + <lo, lo+1, ..., hi>, restricted to the window [0, s.size()).
/// Requires 1 <= lo <= hi.
void close_under_interval(Bits& s, std::size_t lo, std::size_t hi);

} // namespace nsg
