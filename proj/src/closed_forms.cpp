#include "nsg/errors.hpp"
#include "nsg/tree_walker.hpp"

#include <string>

namespace nsg {
namespace {

std::uint64_t binomial(long n, long k) {
    if (k < 0 || n < k)
        return 0;
    std::uint64_t r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace

std::uint64_t grandchildren_of_pseudo_ordinary(int m, int u) {
    if (u < 2 || u > m)
        throw OutOfRange("pseudo-ordinary needs 2 <= u <= m");
    const std::uint64_t base = binomial(m - 1, 2) + static_cast<std::uint64_t>(u);
    return 2 * u <= m ? base : base - 1;
}

std::uint64_t closed_form_low_multiplicity(int gamma) {
    if (gamma < 1)
        throw OutOfRange("genus must be positive");
    // one hyperelliptic semigroup, plus gamma - floor((2 gamma - 1)/3) of
    // multiplicity 3, which needs genus >= 2
    if (gamma == 1)
        return 1;
    return 1 + static_cast<std::uint64_t>(gamma - (2 * gamma - 1) / 3);
}

std::uint64_t closed_form_high_multiplicity(int gamma) {
    if (gamma < 8)
        throw OutOfRange("high-multiplicity closed form needs genus >= 8, got " + std::to_string(gamma));
    const long g = gamma;
    std::uint64_t total = binomial(g - 4, 4) + binomial(g - 2, 3) + binomial(g - 5, 2) +
                          static_cast<std::uint64_t>(6 * g - 14);
    // Multiplicity gamma-3 with one gap class 5 above 2m needs 5 < m; at
    // gamma = 8 (m = 5) those four semigroups do not exist.
    if (gamma == 8)
        total -= 4;
    return total;
}

std::uint64_t unleaved_seed_count(int gamma) {
    return closed_form_low_multiplicity(gamma) + closed_form_high_multiplicity(gamma);
}

} // namespace nsg
