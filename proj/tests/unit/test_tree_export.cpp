#include "nsg/errors.hpp"
#include "nsg/tree_export.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace nsg;

namespace {

std::set<std::pair<std::vector<int>, std::vector<int>>> edge_set(const TreeExport& t) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& [p, c] : t.edges)
        out.emplace(t.nodes[static_cast<std::size_t>(p)].gaps, t.nodes[static_cast<std::size_t>(c)].gaps);
    return out;
}

} // namespace

TEST_CASE("complete export of genus 3") {
    const auto t = build_tree_export(3, ExportVariant::Complete);
    CHECK(t.nodes.size() == 8);
    CHECK(t.edges.size() == 7);
    CHECK(t.nodes.front().gaps.empty());
    // every node but the root has exactly one parent
    std::map<int, int> parents;
    for (const auto& [p, c] : t.edges)
        ++parents[c];
    CHECK(parents.size() == 7);
    CHECK(std::all_of(parents.begin(), parents.end(), [](const auto& kv) { return kv.second == 1; }));
}

TEST_CASE("unleaved export is a subtree whose leaves have full genus") {
    for (int g : {3, 6, 8}) {
        const auto c = build_tree_export(g, ExportVariant::Complete);
        const auto u = build_tree_export(g, ExportVariant::Unleaved);
        const auto ce = edge_set(c);
        const auto ue = edge_set(u);
        CHECK(std::includes(ce.begin(), ce.end(), ue.begin(), ue.end()));
        std::set<int> has_child;
        for (const auto& [p, child] : u.edges)
            has_child.insert(p);
        for (const auto& n : u.nodes)
            if (!has_child.contains(n.id))
                CHECK(n.genus == g);
        const auto d = build_tree_export(g, ExportVariant::Difference);
        std::set<std::pair<std::vector<int>, std::vector<int>>> expected;
        std::set_difference(ce.begin(), ce.end(), ue.begin(), ue.end(), std::inserter(expected, expected.end()));
        CHECK(edge_set(d) == expected);
    }
}

TEST_CASE("DOT text") {
    const auto dot = to_dot(build_tree_export(2, ExportVariant::Complete));
    CHECK(dot.starts_with("digraph complete {"));
    CHECK(dot.find("n0 [label=\"{}\"]") != std::string::npos);
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    CHECK(dot.find("{1,3}") != std::string::npos);
    CHECK_THROWS_AS(build_tree_export(13, ExportVariant::Complete), OutOfRange);
    CHECK(parse_variant("difference") == ExportVariant::Difference);
    CHECK_THROWS_AS(parse_variant("both"), OutOfRange);
}
