#include "nsg/tree_export.hpp"

#include "nsg/errors.hpp"
#include "nsg/tree_walker.hpp"

#include <map>
#include <set>
#include <sstream>

namespace nsg {
namespace {

std::vector<int> gaps_of(const NodeView& v) {
    std::vector<int> out;
    if (v.encoding == nullptr) { // ordinary
        for (int x = 1; x < v.ctx.multiplicity; ++x)
            out.push_back(x);
        return out;
    }
    return reconstruct(*v.encoding, v.ctx.conductor).gaps();
}

std::vector<std::vector<int>> collect(int genus, bool unleaved) {
    std::vector<std::vector<int>> out;
    const Visitor visit = [&](const NodeView& v) { out.push_back(gaps_of(v)); };
    if (unleaved)
        explore_unleaved_visit(genus, visit);
    else
        explore_tree(genus, visit);
    return out;
}

TreeExport assemble(const std::vector<std::vector<int>>& all, const std::set<std::vector<int>>& keep,
                    ExportVariant variant) {
    TreeExport t;
    t.variant = variant;
    std::map<std::vector<int>, int> ids;
    for (const auto& g : all) {
        if (!keep.contains(g))
            continue;
        const int id = static_cast<int>(t.nodes.size());
        ids.emplace(g, id);
        t.nodes.push_back(ExportNode{id, static_cast<int>(g.size()), g});
    }
    // parents are visited before children, so every parent id already exists
    for (const auto& n : t.nodes) {
        if (n.gaps.empty())
            continue;
        std::vector<int> parent(n.gaps.begin(), n.gaps.end() - 1);
        if (const auto it = ids.find(parent); it != ids.end())
            t.edges.emplace_back(it->second, n.id);
    }
    return t;
}

} // namespace

TreeExport build_tree_export(int genus, ExportVariant variant) {
    if (genus < 0 || genus > 12)
        throw OutOfRange("tree export supports genus 0..12");
    const auto complete = collect(genus, false);
    const std::set<std::vector<int>> complete_set(complete.begin(), complete.end());
    if (variant == ExportVariant::Complete)
        return assemble(complete, complete_set, variant);
    const auto unleaved = collect(genus, true);
    std::set<std::vector<int>> unleaved_set(unleaved.begin(), unleaved.end());
    if (variant == ExportVariant::Unleaved)
        return assemble(unleaved, unleaved_set, variant);

    // difference: complete edges whose child is not in the unleaved tree
    TreeExport full = assemble(complete, complete_set, ExportVariant::Complete);
    TreeExport t;
    t.variant = variant;
    std::map<int, int> remap;
    const auto keep = [&](int id) {
        auto [it, fresh] = remap.try_emplace(id, static_cast<int>(t.nodes.size()));
        if (fresh) {
            ExportNode n = full.nodes[static_cast<std::size_t>(id)];
            n.id = it->second;
            t.nodes.push_back(std::move(n));
        }
        return it->second;
    };
    for (const auto& [p, c] : full.edges) {
        if (unleaved_set.contains(full.nodes[static_cast<std::size_t>(c)].gaps))
            continue;
        const int pid = keep(p);
        t.edges.emplace_back(pid, keep(c));
    }
    return t;
}

std::string to_dot(const TreeExport& tree) {
    std::ostringstream os;
    os << "digraph " << variant_name(tree.variant) << " {\n";
    os << "  node [shape=box, fontsize=10];\n";
    for (const auto& n : tree.nodes) {
        os << "  n" << n.id << " [label=\"{";
        for (std::size_t i = 0; i < n.gaps.size(); ++i)
            os << (i ? "," : "") << n.gaps[i];
        os << "}\"];\n";
    }
    for (const auto& [p, c] : tree.edges)
        os << "  n" << p << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

ExportVariant parse_variant(const std::string& name) {
    if (name == "complete")
        return ExportVariant::Complete;
    if (name == "unleaved")
        return ExportVariant::Unleaved;
    if (name == "difference")
        return ExportVariant::Difference;
    throw OutOfRange("unknown variant '" + name + "'");
}

const char* variant_name(ExportVariant v) noexcept {
    switch (v) {
    case ExportVariant::Complete:
        return "complete";
    case ExportVariant::Unleaved:
        return "unleaved";
    case ExportVariant::Difference:
        return "difference";
    }
    return "complete";
}

} // namespace nsg
