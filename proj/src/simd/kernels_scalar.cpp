#include "nsg/simd/kernels.hpp"

#include <bit>

namespace nsg::simd {
namespace {

void shift_or_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t n = dst.size();
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = static_cast<unsigned>(shift % 64);
    if (word_shift >= n)
        return;
    // high to low so that dst == src behaves as a simultaneous update
    for (std::size_t i = n; i-- > word_shift;) {
        const std::size_t j = i - word_shift;
        std::uint64_t v = src[j] << bit_shift;
        if (bit_shift != 0 && j > 0)
            v |= src[j - 1] >> (64 - bit_shift);
        dst[i] |= v;
    }
}

void or_into_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] |= src[i];
}

std::uint64_t popcount_scalar(std::span<const std::uint64_t> words) {
    std::uint64_t total = 0;
    for (std::uint64_t w : words)
        total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

} // namespace

const BitKernels& scalar_kernels() noexcept {
    static const BitKernels table{Isa::Scalar, "scalar", &shift_or_scalar, &or_into_scalar, &popcount_scalar};
    return table;
}

} // namespace nsg::simd
