#include "nsg/errors.hpp"
#include "nsg/semigroup.hpp"
#include "oracle_checks.hpp"

#include <doctest.h>

#include <vector>

using namespace nsg;

namespace {
CanonicalSemigroup gaps(std::vector<int> g) { return from_gaps(g); }
} // namespace

TEST_CASE("from_gaps builds N0, ordinary and pseudo-ordinary semigroups") {
    const auto n0 = gaps({});
    CHECK(n0.conductor() == 0);
    CHECK(n0.multiplicity() == 1);
    CHECK(n0.genus() == 0);
    CHECK(n0.frobenius() == -1);

    const auto o4 = gaps({1, 2, 3});
    CHECK(o4.multiplicity() == 4);
    CHECK(o4.conductor() == 4);
    CHECK(o4.is_ordinary());

    const auto p42 = gaps({1, 2, 3, 5});
    CHECK(p42.multiplicity() == 4);
    CHECK(p42.jump() == 2);
    CHECK(p42.conductor() == 6);
    CHECK(p42.genus() == 4);
    CHECK_FALSE(p42.is_ordinary());
    CHECK(p42.membership().size() >= static_cast<std::size_t>(p42.conductor() + p42.multiplicity()));
}

TEST_CASE("from_gaps rejects sets whose complement is not closed") {
    CHECK_THROWS_AS(gaps({1, 2, 3, 8}), ClosureViolation); // 8 = 4+4
    CHECK_THROWS_AS(gaps({2}), ClosureViolation);           // 1 in, so 2 = 1+1 must be in
    CHECK_THROWS_AS(gaps({0}), OutOfRange);
    CHECK_THROWS_AS(gaps({-3}), OutOfRange);
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(gaps({})) == std::vector<int>{1});
    CHECK(minimal_generators(gaps({1, 2, 3})) == std::vector<int>{4, 5, 6, 7});
    CHECK(minimal_generators(gaps({1, 2, 3, 5})) == std::vector<int>{4, 6, 7, 9});
    CHECK(right_generators(gaps({1, 2, 3, 5})) == std::vector<int>{6, 7, 9});
}

TEST_CASE("generated_by") {
    const auto s = generated_by(std::vector<int>{3, 4});
    CHECK(s.gaps() == std::vector<int>{1, 2, 5});
    CHECK(generated_by(std::vector<int>{5, 6}).conductor() == 20);
    CHECK_THROWS_AS(generated_by(std::vector<int>{4, 6}), PreconditionViolated);
}

TEST_CASE("omega and shrinking") {
    const auto p = omega_and_shrink(gaps({1, 2, 3, 5}));
    CHECK(p.omega == 4);
    REQUIRE(p.shrink);
    CHECK(p.shrink->genus() == 0);

    const auto q = omega_and_shrink(gaps({1, 2, 3, 4, 8})); // Q_{5,8}
    CHECK(q.omega == 1);
    CHECK(*q.shrink == generated_by(std::vector<int>{5, 6, 7}));

    // left elements {0,4,6}
    const auto r = omega_and_shrink(gaps({1, 2, 3, 5, 7}));
    CHECK(r.omega == 2);
    CHECK(*r.shrink == generated_by(std::vector<int>{2, 3}));

    const auto o = omega_and_shrink(gaps({1, 2, 3}));
    CHECK(o.omega == 0);
    CHECK_FALSE(o.shrink);
}

TEST_CASE("oracle children") {
    const auto n0 = oracle_children(gaps({}));
    REQUIRE(n0.size() == 1);
    CHECK(n0[0] == gaps({1}));

    const auto o3 = oracle_children(gaps({1, 2}));
    REQUIRE(o3.size() == 3);
    CHECK(o3[0] == gaps({1, 2, 3}));
    CHECK(o3[1] == gaps({1, 2, 4}));
    CHECK(o3[2] == gaps({1, 2, 5}));

    const auto p = oracle_children(gaps({1, 2, 3, 5}));
    REQUIRE(p.size() == 3);
    CHECK(p[0].frobenius() == 6);
    CHECK(p[1].frobenius() == 7);
    CHECK(p[2].frobenius() == 9);
    CHECK_THROWS_AS(remove_generator(gaps({1, 2, 3, 5}), 8), PreconditionViolated);
}

TEST_CASE("oracle counts") {
    CHECK(oracle_count(1).count == 1);
    CHECK(oracle_count(1).complete_nodes == 2);
    CHECK(oracle_count(10).count == 204);
    CHECK(oracle_count(10).complete_nodes == 478);
    CHECK(oracle_count(15).count == 2857);
    CHECK(oracle_count(15).complete_nodes == 6964);
    // A007323
    const std::vector<std::uint64_t> a007323{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857};
    for (int g = 0; g < static_cast<int>(a007323.size()); ++g)
        CHECK(oracle_count(g).count == a007323[static_cast<std::size_t>(g)]);
    CHECK_THROWS_AS(oracle_count(12, 100), ResourceLimit);
}

TEST_CASE("tree structure invariants up to genus 12") {
    testing::for_each_semigroup(12, [](const CanonicalSemigroup& s) {
        const auto os = omega_and_shrink(s);
        if (os.omega != 0) {
            // L = omega * shrink below the Frobenius number, then [c, inf)
            for (int x = 0; x < s.conductor(); ++x) {
                const bool in = x % os.omega == 0 && os.shrink->contains(x / os.omega);
                if (x < s.frobenius() && in != s.contains(x))
                    FAIL_CHECK("shrink mismatch in " << testing::gaps_string(s));
            }
        }
        const auto rgs = right_generators(s);
        for (int r : s.conductor() == 0 ? std::vector<int>{} : rgs)
            if (r < s.conductor() || r > s.conductor() + s.multiplicity() - 1)
                FAIL_CHECK("right generator out of range in " << testing::gaps_string(s));
        // child i has right generators {sigma_{i+1}..} possibly plus sigma_i + m
        // (removing the multiplicity of an ordinary semigroup adds two)
        for (std::size_t i = s.is_ordinary() ? 1 : 0; i < rgs.size(); ++i) {
            const auto child = remove_generator(s, rgs[i]);
            std::vector<int> expected(rgs.begin() + static_cast<long>(i) + 1, rgs.end());
            auto got = right_generators(child);
            if (got != expected) {
                expected.push_back(rgs[i] + s.multiplicity());
                if (got != expected)
                    FAIL_CHECK("child right generators of " << testing::gaps_string(s));
            }
        }
    });
}
