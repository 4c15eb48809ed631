#include "nsg/shrink_encoding.hpp"

#include "nsg/errors.hpp"

#include <numeric>
#include <string>

namespace nsg {
namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// factor * shrink, on the window [0, n).
Bits scaled_shrink(const ShrinkEncoding& e, long factor, long n) {
    Bits out(static_cast<std::size_t>(n));
    for (long x = 0; x * factor < n; ++x)
        if (e.shrink_contains(x))
            out.set(static_cast<std::size_t>(x * factor));
    return out;
}

void require_in_scan_range(const NodeContext& ctx, int sigma) {
    if (sigma < ctx.conductor || sigma > ctx.conductor + ctx.multiplicity - 1)
        throw OutOfRange("sigma " + std::to_string(sigma) + " outside [" + std::to_string(ctx.conductor) + ", " +
                         std::to_string(ctx.conductor + ctx.multiplicity - 1) + "]");
}

} // namespace

ShrinkEncoding::ShrinkEncoding(int omega, Bits window) : bits_(std::move(window)), omega_(omega) {
    if (omega < 1)
        throw PreconditionViolated("omega must be positive");
    conductor_ = static_cast<int>(bits_.one_past_last_zero());
    bits_.truncate(static_cast<std::size_t>(conductor_));
    genus_ = conductor_ - static_cast<int>(bits_.count());
}

bool check_right_generator(const ShrinkEncoding& e, const NodeContext& ctx, int sigma) {
    require_in_scan_range(ctx, sigma);
    return is_right_generator(e, sigma);
}

bool check_strong_generator(const ShrinkEncoding& child, const NodeContext& ctx, int sigma, bool case_a) {
    if (sigma < ctx.conductor || sigma > ctx.conductor + ctx.multiplicity - 1)
        throw NotARightGenerator(std::to_string(sigma) + " cannot be a right generator here");
    if (sigma >= ctx.conductor + ctx.jump)
        return false;
    if (case_a)
        return true;
    const long next = static_cast<long>(sigma) + ctx.multiplicity;
    return next % child.omega() != 0 || !child.shrink_contains(next / child.omega());
}

long parent_transfer_conductor_bound(const ShrinkEncoding& e, const NodeContext& ctx, int sigma) {
    const long c = ctx.conductor;
    const long omega = e.omega();
    const long cs = e.shrink_conductor();
    if (sigma == c)
        return cs;
    if (sigma == c + 1) {
        const long reduced = std::gcd(omega, c);
        const long factor = omega / reduced;
        return cs * factor + (c / reduced - 1) * (factor - 1);
    }
    return cs * omega + (floor_div(omega - 2, sigma - c - 1) + 1) * c;
}

long sibling_transfer_conductor_bound(const ShrinkEncoding& prev) { return prev.shrink_conductor(); }

ShrinkEncoding encoding_from_parent(const ShrinkEncoding& e, const NodeContext& ctx, int sigma) {
    const long c = ctx.conductor;
    if (sigma == c)
        return e;
    const long n = parent_transfer_conductor_bound(e, ctx, sigma) + 1;
    if (sigma == c + 1) {
        // left elements gain c: shrink becomes (omega/w) * shrink + (c/w) N0
        const long reduced = std::gcd(static_cast<long>(e.omega()), c);
        Bits window = scaled_shrink(e, e.omega() / reduced, n);
        const auto step = static_cast<std::size_t>(c / reduced);
        close_under_interval(window, step, step);
        return ShrinkEncoding(static_cast<int>(reduced), std::move(window));
    }
    // left elements gain the whole interval c..sigma-1, so omega drops to 1
    Bits window = scaled_shrink(e, e.omega(), n);
    close_under_interval(window, static_cast<std::size_t>(c), static_cast<std::size_t>(sigma - 1));
    return ShrinkEncoding(1, std::move(window));
}

ShrinkEncoding encoding_from_predecessor_sibling(const ShrinkEncoding& prev, const NodeContext& ctx,
                                                 int sigma_prev, int sigma) {
    if (prev.omega() != 1)
        throw PreconditionViolated("predecessor sibling has omega " + std::to_string(prev.omega()));
    if (sigma_prev == ctx.conductor)
        throw PreconditionViolated("predecessor sibling removed the conductor");
    if (sigma_prev >= sigma)
        throw PreconditionViolated("predecessor generator must be smaller");
    const long n = sibling_transfer_conductor_bound(prev) + 1;
    Bits window(static_cast<std::size_t>(n));
    const auto& src = prev.shrink_bits();
    for (std::size_t x = 0; x < src.size(); ++x)
        if (src.test(x))
            window.set(x);
    window.set_range(src.size(), static_cast<std::size_t>(n));
    close_under_interval(window, static_cast<std::size_t>(sigma_prev), static_cast<std::size_t>(sigma - 1));
    return ShrinkEncoding(1, std::move(window));
}

long interval_conductor(int i, int j) {
    if (i < 2 || j <= i)
        throw OutOfRange("interval semigroup needs 2 <= i < j");
    return static_cast<long>(i) * ((j - 2) / (j - i));
}

long interval_genus(int i, int j) {
    if (i < 2 || j <= i)
        throw OutOfRange("interval semigroup needs 2 <= i < j");
    const long kc = (j - 2) / (j - i);
    // sum over k = 1..kc of (i + (k-1)(i-j) - 1)
    return kc * (i - 1) + static_cast<long>(i - j) * kc * (kc - 1) / 2;
}

ShrinkEncoding encode_pseudo_ordinary(int m, int u) {
    if (u < 2 || u > m)
        throw OutOfRange("pseudo-ordinary needs 2 <= u <= m");
    return ShrinkEncoding(m, Bits{});
}

ShrinkEncoding encode_quasi_ordinary(int m, int frobenius) {
    if (frobenius < m + 1 || frobenius > 2 * m - 1)
        throw OutOfRange("quasi-ordinary needs m+1 <= F <= 2m-1");
    if (frobenius == m + 1)
        return encode_pseudo_ordinary(m, 2);
    Bits window(static_cast<std::size_t>(interval_conductor(m, frobenius - 1) + 1));
    window.set(0);
    close_under_interval(window, static_cast<std::size_t>(m), static_cast<std::size_t>(frobenius - 1));
    return ShrinkEncoding(1, std::move(window));
}

CanonicalSemigroup reconstruct(const ShrinkEncoding& e, int conductor) {
    std::vector<std::uint8_t> prefix(static_cast<std::size_t>(conductor));
    for (int x = 0; x < conductor; ++x)
        prefix[static_cast<std::size_t>(x)] = e.contains_left(x) ? 1 : 0;
    return CanonicalSemigroup::from_prefix(std::move(prefix));
}

ShrinkEncoding encoding_of(const CanonicalSemigroup& s) {
    const auto os = omega_and_shrink(s);
    if (os.omega == 0)
        throw PreconditionViolated("ordinary semigroups have no shrink encoding");
    const auto& shrink = *os.shrink;
    Bits window(static_cast<std::size_t>(shrink.conductor()));
    for (int x = 0; x < shrink.conductor(); ++x)
        if (shrink.contains(x))
            window.set(static_cast<std::size_t>(x));
    return ShrinkEncoding(os.omega, std::move(window));
}

} // namespace nsg
