#pragma once

// Splits an exploration into independent subtree tasks and runs them on a
// pool of threads. Results are merged in schedule order, so they never depend
// on the number of workers.

#include "nsg/tree_walker.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nsg {

enum class ExploreMode { Complete, UnleavedCount, UnleavedVisit };

struct WorkItem {
    enum class Kind { ClosedForm, RootNodes, PseudoChain, QuasiOrdinaryRoot };
    Kind kind = Kind::ClosedForm;
    int gamma = 0;
    int multiplicity = 0;
    int parameter = 0; ///< jump u for PseudoChain, Frobenius number F for QuasiOrdinaryRoot
    ExploreMode mode = ExploreMode::UnleavedCount;

    friend bool operator==(const WorkItem&, const WorkItem&) = default;
};

struct ParallelResult {
    std::uint64_t count = 0;
    ExplorationStats stats;

    friend bool operator==(const ParallelResult&, const ParallelResult&) = default;
};

/// Tasks whose results add up to the whole exploration. UnleavedCount needs
/// gamma >= 8.
std::vector<WorkItem> build_schedule(int gamma, ExploreMode mode = ExploreMode::UnleavedCount);

/// Result of a single task.
ParallelResult run_item(const WorkItem& item);

/// Runs the tasks on up to `workers` threads (workers >= 1). The first task
/// error is rethrown as WorkerFailure after outstanding tasks are abandoned.
ParallelResult run_parallel(std::span<const WorkItem> schedule, int workers);

/// std::thread::hardware_concurrency, at least 1.
int default_workers() noexcept;

} // namespace nsg
