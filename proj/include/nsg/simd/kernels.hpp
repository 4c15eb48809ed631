#pragma once

// Word-level bitset primitives behind the monoid closures. Each primitive has
// a scalar reference and, where the CPU supports it, an AVX2 variant; the
// active table is picked once at startup and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace nsg::simd {

enum class Isa { Scalar, Avx2 };

struct BitKernels {
    Isa isa;
    std::string_view name;
    /// dst |= src << shift, bit 0 of word 0 being the lowest bit. dst and src
    /// have the same length and may alias; bits shifted past the end are lost.
    void (*shift_or)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift);
    /// dst |= src
    void (*or_into)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
    std::uint64_t (*popcount)(std::span<const std::uint64_t> words);
};

const BitKernels& scalar_kernels() noexcept;

/// nullptr when the binary or the CPU lacks AVX2.
const BitKernels* avx2_kernels() noexcept;

const BitKernels& active_kernels() noexcept;

/// Forces a kernel table; returns false if `isa` is unavailable here.
bool select_kernels(Isa isa) noexcept;

} // namespace nsg::simd
