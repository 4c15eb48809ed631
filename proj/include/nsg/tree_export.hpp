#pragma once

// Small semigroup trees as graphs, for drawing.

#include <string>
#include <utility>
#include <vector>

namespace nsg {

enum class ExportVariant { Complete, Unleaved, Difference };

struct ExportNode {
    int id = 0;
    int genus = 0;
    std::vector<int> gaps; ///< sorted
};

struct TreeExport {
    std::vector<ExportNode> nodes;
    std::vector<std::pair<int, int>> edges; ///< parent id, child id
    ExportVariant variant = ExportVariant::Complete;
};

/// genus must lie in [0, 12]. The difference variant holds the nodes and
/// edges of the complete tree that are not in the unleaved tree (edges keep
/// their complete-tree parent).
TreeExport build_tree_export(int genus, ExportVariant variant);

std::string to_dot(const TreeExport& tree);

/// "complete", "unleaved", "difference"; throws OutOfRange otherwise.
ExportVariant parse_variant(const std::string& name);
const char* variant_name(ExportVariant v) noexcept;

} // namespace nsg
