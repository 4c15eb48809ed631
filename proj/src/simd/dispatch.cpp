#include "nsg/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace nsg::simd {
namespace {

const BitKernels* pick_default() noexcept {
    const char* forced = std::getenv("NSG_ISA");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0)
        return &scalar_kernels();
    if (const BitKernels* avx2 = avx2_kernels())
        return avx2;
    return &scalar_kernels();
}

std::atomic<const BitKernels*>& active_slot() noexcept {
    static std::atomic<const BitKernels*> slot{pick_default()};
    return slot;
}

} // namespace

const BitKernels& active_kernels() noexcept { return *active_slot().load(std::memory_order_relaxed); }

bool select_kernels(Isa isa) noexcept {
    const BitKernels* table = isa == Isa::Scalar ? &scalar_kernels() : avx2_kernels();
    if (table == nullptr)
        return false;
    active_slot().store(table, std::memory_order_relaxed);
    return true;
}

} // namespace nsg::simd
