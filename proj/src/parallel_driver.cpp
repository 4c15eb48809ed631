#include "nsg/parallel_driver.hpp"

#include "nsg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

namespace nsg {
namespace {

void schedule_counting(int gamma, std::vector<WorkItem>& out) {
    if (gamma < 8)
        throw OutOfRange("unleaved counting needs genus >= 8, got " + std::to_string(gamma));
    const auto item = [&](WorkItem::Kind kind, int m, int p) {
        out.push_back(WorkItem{kind, gamma, m, p, ExploreMode::UnleavedCount});
    };
    item(WorkItem::Kind::ClosedForm, 0, 0);
    for (int m = 4; m <= gamma - 4; ++m) {
        const int min_u = std::min(m, gamma - m);
        for (int u = 2; u < min_u; ++u)
            item(WorkItem::Kind::PseudoChain, m, u);
        // u = gamma-m stands for the grandchildren shortcut
        item(WorkItem::Kind::PseudoChain, m, min_u < gamma - m ? m : gamma - m);
        for (int f = m + 2; f <= 2 * m - 2; ++f) {
            item(WorkItem::Kind::QuasiOrdinaryRoot, m, f);
            if (interval_genus(m, f - 1) <= gamma)
                break;
        }
    }
}

void schedule_visiting(int gamma, ExploreMode mode, std::vector<WorkItem>& out) {
    if (gamma < 0)
        throw OutOfRange("genus must be non-negative");
    const auto item = [&](WorkItem::Kind kind, int m, int p) { out.push_back(WorkItem{kind, gamma, m, p, mode}); };
    for (int m = 1; m <= gamma + 1; ++m) {
        item(WorkItem::Kind::RootNodes, m, 0);
        if (m <= 2 || m == gamma + 1)
            continue;
        for (int u : pseudo_chain_jumps(m, gamma))
            item(WorkItem::Kind::PseudoChain, m, u);
        for (int f = m + 2; f <= 2 * m - 1; ++f) {
            item(WorkItem::Kind::QuasiOrdinaryRoot, m, f);
            // in the unleaved tree a trimmed root ends the scan
            if (mode == ExploreMode::UnleavedVisit && interval_genus(m, f - 1) < gamma)
                break;
        }
    }
}

ParallelResult run_counting_item(const WorkItem& item) {
    ParallelResult r;
    const int gamma = item.gamma;
    const int m = item.multiplicity;
    switch (item.kind) {
    case WorkItem::Kind::ClosedForm:
        r.count = unleaved_seed_count(gamma);
        r.stats.visited_nodes = static_cast<std::uint64_t>(std::max(0, gamma - 7)); // O_4 .. O_{gamma-4}
        break;
    case WorkItem::Kind::PseudoChain:
        if (item.parameter == gamma - m && gamma - m <= m)
            r.count = pseudo_ordinary_grandchildren_shortcut(m, gamma, r.stats);
        else
            r.count = pseudo_descend_and_trim(m, item.parameter, gamma, r.stats);
        break;
    case WorkItem::Kind::QuasiOrdinaryRoot:
        r.count = quasi_ordinary_root_and_trim(m, item.parameter, gamma, r.stats);
        break;
    case WorkItem::Kind::RootNodes:
        throw PreconditionViolated("root-node tasks belong to visiting schedules");
    }
    r.stats.leaf_count = r.count;
    return r;
}

} // namespace

std::vector<WorkItem> build_schedule(int gamma, ExploreMode mode) {
    std::vector<WorkItem> out;
    if (mode == ExploreMode::UnleavedCount)
        schedule_counting(gamma, out);
    else
        schedule_visiting(gamma, mode, out);
    return out;
}

ParallelResult run_item(const WorkItem& item) {
    if (item.mode == ExploreMode::UnleavedCount)
        return run_counting_item(item);
    TreePart part;
    part.multiplicity = item.multiplicity;
    part.parameter = item.parameter;
    switch (item.kind) {
    case WorkItem::Kind::RootNodes:
        part.kind = TreePart::Kind::Roots;
        break;
    case WorkItem::Kind::PseudoChain:
        part.kind = TreePart::Kind::PseudoChain;
        break;
    case WorkItem::Kind::QuasiOrdinaryRoot:
        part.kind = TreePart::Kind::QuasiOrdinaryRoot;
        break;
    case WorkItem::Kind::ClosedForm:
        throw PreconditionViolated("closed-form tasks belong to counting schedules");
    }
    ParallelResult r;
    r.stats = explore_part(part, item.gamma, item.mode == ExploreMode::UnleavedVisit);
    r.count = r.stats.leaf_count;
    return r;
}

ParallelResult run_parallel(std::span<const WorkItem> schedule, int workers) {
    if (workers < 1)
        throw PreconditionViolated("need at least one worker");
    std::vector<std::optional<ParallelResult>> results(schedule.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    const auto work = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed))
                return;
            const std::size_t i = next.fetch_add(1);
            if (i >= schedule.size())
                return;
            try {
                results[i] = run_item(schedule[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    const auto n = static_cast<std::size_t>(workers);
    if (n == 1 || schedule.size() <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(std::min(n, schedule.size()));
        for (std::size_t t = 0; t < std::min(n, schedule.size()); ++t)
            pool.emplace_back(work);
    }

    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const std::exception& e) {
            throw WorkerFailure(std::string("task failed: ") + e.what());
        } catch (...) {
            throw WorkerFailure("task failed with an unknown error");
        }
    }
    ParallelResult total;
    for (const auto& r : results) {
        total.count = checked_add(total.count, r->count);
        total.stats += r->stats;
    }
    return total;
}

int default_workers() noexcept {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

} // namespace nsg
