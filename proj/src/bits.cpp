#include "nsg/bits.hpp"

#include "nsg/simd/kernels.hpp"

#include <bit>
#include <cassert>

namespace nsg {

void Bits::set_range(std::size_t from, std::size_t to) noexcept {
    for (std::size_t i = from; i < to; ++i)
        set(i);
}

void Bits::reset() noexcept {
    for (auto& w : words_)
        w = 0;
}

void Bits::clear_tail() noexcept {
    const std::size_t rem = size_ & 63;
    if (rem != 0)
        words_.back() &= (std::uint64_t{1} << rem) - 1;
}

void Bits::shift_or(std::size_t shift) noexcept {
    simd::active_kernels().shift_or(words_, words_, shift);
    clear_tail();
}

void Bits::shift_or_from(const Bits& src, std::size_t shift) noexcept {
    assert(src.size_ == size_);
    simd::active_kernels().shift_or(words_, src.words_, shift);
    clear_tail();
}

void Bits::or_with(const Bits& other) noexcept {
    assert(other.size_ == size_);
    simd::active_kernels().or_into(words_, other.words_);
}

std::size_t Bits::count() const noexcept { return simd::active_kernels().popcount(words_); }

std::size_t Bits::one_past_last_zero() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
        std::uint64_t zeros = ~words_[w];
        if (w + 1 == words_.size() && (size_ & 63) != 0)
            zeros &= (std::uint64_t{1} << (size_ & 63)) - 1;
        if (zeros != 0)
            return w * 64 + static_cast<std::size_t>(63 - std::countl_zero(zeros)) + 1;
    }
    return 0;
}

void Bits::truncate(std::size_t nbits) {
    assert(nbits <= size_);
    size_ = nbits;
    words_.resize((nbits + 63) / 64);
    clear_tail();
}

void close_under_interval(Bits& s, std::size_t lo, std::size_t hi) {
    assert(lo >= 1 && lo <= hi);
    const std::size_t n = s.size();
    Bits window(n);
    // After the round with step `lo`, s holds every element plus 0..2^(k+1)-1
    // summands from the interval; t summands sweep exactly [t*lo, t*hi].
    for (std::size_t a = lo, b = hi; a < n; a *= 2, b *= 2) {
        window.reset();
        window.shift_or_from(s, a);
        const std::size_t width = b - a + 1;
        std::size_t covered = 1;
        while (covered * 2 <= width && covered < n) {
            window.shift_or(covered);
            covered *= 2;
        }
        if (covered < width)
            window.shift_or(width - covered);
        s.or_with(window);
    }
}

} // namespace nsg
