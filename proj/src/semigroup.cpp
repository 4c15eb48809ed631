#include "nsg/semigroup.hpp"

#include "nsg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace nsg {

CanonicalSemigroup::CanonicalSemigroup() : membership_{1} {}

CanonicalSemigroup CanonicalSemigroup::from_prefix(std::vector<std::uint8_t> below_conductor) {
    CanonicalSemigroup s;
    const int c = static_cast<int>(below_conductor.size());
    s.conductor_ = c;
    s.genus_ = static_cast<int>(std::count(below_conductor.begin(), below_conductor.end(), 0));

    auto member = [&](int x) { return x >= c || below_conductor[static_cast<std::size_t>(x)] != 0; };
    int m = 1;
    while (!member(m))
        ++m;
    int second = m + 1;
    while (!member(second))
        ++second;
    s.multiplicity_ = m;
    s.jump_ = second - m;

    const int bound = c + m;
    s.membership_.assign(static_cast<std::size_t>(bound), 1);
    for (int x = 0; x < c; ++x)
        s.membership_[static_cast<std::size_t>(x)] = below_conductor[static_cast<std::size_t>(x)];
    if (c > 0)
        s.membership_[0] = 1;
    return s;
}

std::vector<int> CanonicalSemigroup::gaps() const {
    std::vector<int> out;
    for (int x = 1; x < conductor_; ++x)
        if (!contains(x))
            out.push_back(x);
    return out;
}

std::vector<int> CanonicalSemigroup::left_elements() const {
    std::vector<int> out;
    for (int x = 0; x < frobenius(); ++x)
        if (contains(x))
            out.push_back(x);
    return out;
}

CanonicalSemigroup from_gaps(std::span<const int> gaps) {
    int max_gap = 0;
    for (int g : gaps) {
        if (g <= 0)
            throw OutOfRange("gap " + std::to_string(g) + " is not a positive integer");
        max_gap = std::max(max_gap, g);
    }
    if (max_gap == 0)
        return CanonicalSemigroup{};

    std::vector<std::uint8_t> prefix(static_cast<std::size_t>(max_gap + 1), 1);
    for (int g : gaps)
        prefix[static_cast<std::size_t>(g)] = 0;

    for (int a = 1; a <= max_gap; ++a) {
        if (!prefix[static_cast<std::size_t>(a)])
            continue;
        for (int b = a; a + b <= max_gap; ++b) {
            if (prefix[static_cast<std::size_t>(b)] && !prefix[static_cast<std::size_t>(a + b)])
                throw ClosureViolation(std::to_string(a) + " + " + std::to_string(b) + " = " +
                                       std::to_string(a + b) + " is listed as a gap");
        }
    }
    return CanonicalSemigroup::from_prefix(std::move(prefix));
}

CanonicalSemigroup generated_by(std::span<const int> generators) {
    int d = 0;
    int smallest = 0;
    for (int g : generators) {
        if (g < 0)
            throw OutOfRange("negative generator");
        if (g == 0)
            continue;
        d = std::gcd(d, g);
        smallest = smallest == 0 ? g : std::min(smallest, g);
    }
    if (d == 0 || smallest == 1)
        return CanonicalSemigroup{};
    if (d != 1)
        throw PreconditionViolated("generators have gcd " + std::to_string(d) + ", not a numerical semigroup");

    // Grow membership until `smallest` consecutive members appear; from there
    // on every integer is reachable by adding copies of `smallest`.
    std::vector<std::uint8_t> mem{1};
    int run = 1;
    int x = 0;
    while (run < smallest) {
        ++x;
        bool in = false;
        for (int g : generators)
            if (g > 0 && g <= x && mem[static_cast<std::size_t>(x - g)]) {
                in = true;
                break;
            }
        mem.push_back(in ? 1 : 0);
        run = in ? run + 1 : 0;
    }
    const int conductor = x - smallest + 1;
    mem.resize(static_cast<std::size_t>(conductor));
    return CanonicalSemigroup::from_prefix(std::move(mem));
}

std::vector<int> minimal_generators(const CanonicalSemigroup& s) {
    std::vector<int> out;
    const int limit = std::max(s.conductor(), 1) + s.multiplicity();
    for (int x = 1; x < limit; ++x) {
        if (!s.contains(x))
            continue;
        bool decomposable = false;
        for (int a = 1; a <= x / 2 && !decomposable; ++a)
            decomposable = s.contains(a) && s.contains(x - a);
        if (!decomposable)
            out.push_back(x);
    }
    return out;
}

std::vector<int> right_generators(const CanonicalSemigroup& s) {
    auto gens = minimal_generators(s);
    std::erase_if(gens, [&](int g) { return g <= s.frobenius(); });
    return gens;
}

OmegaShrink omega_and_shrink(const CanonicalSemigroup& s) {
    OmegaShrink out;
    const auto left = s.left_elements();
    for (int x : left)
        out.omega = std::gcd(out.omega, x);
    if (out.omega == 0)
        return out;
    std::vector<int> scaled;
    for (int x : left)
        if (x > 0)
            scaled.push_back(x / out.omega);
    out.shrink = generated_by(scaled);
    return out;
}

CanonicalSemigroup remove_generator(const CanonicalSemigroup& s, int sigma) {
    bool minimal = sigma > s.frobenius() && sigma > 0 && s.contains(sigma);
    for (int a = 1; minimal && 2 * a <= sigma; ++a)
        if (s.contains(a) && s.contains(sigma - a))
            minimal = false;
    if (!minimal)
        throw NotARightGenerator(std::to_string(sigma) + " is not a right generator");
    std::vector<std::uint8_t> prefix(static_cast<std::size_t>(sigma + 1));
    for (int x = 0; x < sigma; ++x)
        prefix[static_cast<std::size_t>(x)] = s.contains(x) ? 1 : 0;
    prefix[static_cast<std::size_t>(sigma)] = 0;
    return CanonicalSemigroup::from_prefix(std::move(prefix));
}

std::vector<CanonicalSemigroup> oracle_children(const CanonicalSemigroup& s) {
    std::vector<CanonicalSemigroup> out;
    for (int sigma : right_generators(s))
        out.push_back(remove_generator(s, sigma));
    return out;
}

void oracle_walk(const CanonicalSemigroup& root, int max_genus,
                 const std::function<void(const CanonicalSemigroup&)>& visit,
                 std::uint64_t node_budget) {
    std::vector<CanonicalSemigroup> stack{root};
    std::uint64_t produced = 1;
    while (!stack.empty()) {
        CanonicalSemigroup node = std::move(stack.back());
        stack.pop_back();
        visit(node);
        if (node.genus() >= max_genus)
            continue;
        auto kids = oracle_children(node);
        produced += kids.size();
        if (produced > node_budget)
            throw ResourceLimit("oracle node budget of " + std::to_string(node_budget) + " exceeded");
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back(std::move(*it));
    }
}

std::uint64_t default_oracle_node_budget() {
    if (const char* env = std::getenv("NSG_ORACLE_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 50'000'000ULL;
}

OracleCount oracle_count(int gamma) { return oracle_count(gamma, default_oracle_node_budget()); }

OracleCount oracle_count(int gamma, std::uint64_t node_budget) {
    if (gamma < 0)
        throw OutOfRange("genus must be non-negative");
    OracleCount out;
    oracle_walk(CanonicalSemigroup{}, gamma,
                [&](const CanonicalSemigroup& s) {
                    ++out.complete_nodes;
                    if (s.genus() == gamma)
                        ++out.count;
                },
                node_budget);
    return out;
}

} // namespace nsg
