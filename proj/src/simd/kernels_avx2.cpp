#include "nsg/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define NSG_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace nsg::simd {

#ifdef NSG_HAVE_AVX2_KERNELS
namespace {

#define NSG_AVX2 __attribute__((target("avx2")))

NSG_AVX2 void shift_or_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t n = dst.size();
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = static_cast<unsigned>(shift % 64);
    if (word_shift >= n)
        return;

    const __m128i left = _mm_cvtsi32_si128(static_cast<int>(bit_shift));
    // a count of 64 makes the carry lane zero, which is what bit_shift == 0 needs
    const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - bit_shift));

    // Blocks of four destination words, highest first. Block [i, i+4) reads
    // src[i-ws-1, i-ws+4), never above dst's own block, so aliasing is safe.
    std::size_t i = n;
    while (i >= word_shift + 1 + 4) {
        i -= 4;
        const std::size_t j = i - word_shift;
        const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + j));
        const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + j - 1));
        const __m256i moved = _mm256_or_si256(_mm256_sll_epi64(cur, left), _mm256_srl_epi64(prev, right));
        __m256i* out = reinterpret_cast<__m256i*>(dst.data() + i);
        _mm256_storeu_si256(out, _mm256_or_si256(_mm256_loadu_si256(out), moved));
    }
    while (i-- > word_shift) {
        const std::size_t j = i - word_shift;
        std::uint64_t v = src[j] << bit_shift;
        if (bit_shift != 0 && j > 0)
            v |= src[j - 1] >> (64 - bit_shift);
        dst[i] |= v;
    }
}

NSG_AVX2 void or_into_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i* out = reinterpret_cast<__m256i*>(dst.data() + i);
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        _mm256_storeu_si256(out, _mm256_or_si256(_mm256_loadu_si256(out), v));
    }
    for (; i < n; ++i)
        dst[i] |= src[i];
}

// Nibble lookup popcount (Mula et al.), accumulated per 64-bit lane.
NSG_AVX2 std::uint64_t popcount_avx2(std::span<const std::uint64_t> words) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    const std::size_t n = words.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        total += static_cast<std::uint64_t>(__builtin_popcountll(words[i]));
    return total;
}

#undef NSG_AVX2

} // namespace

const BitKernels* avx2_kernels() noexcept {
    static const BitKernels table{Isa::Avx2, "avx2", &shift_or_avx2, &or_into_avx2, &popcount_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
}

#else

const BitKernels* avx2_kernels() noexcept { return nullptr; }

#endif

} // namespace nsg::simd
