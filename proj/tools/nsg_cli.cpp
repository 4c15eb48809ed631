// nsg: count numerical semigroups by genus, check the counts against brute
// force, and draw small trees.

#include "nsg/errors.hpp"
#include "nsg/parallel_driver.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/tree_export.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

enum Exit { Ok = 0, Mismatch = 1, Usage = 2, Internal = 3, Io = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nsg::ParallelResult run(int genus, nsg::ExploreMode mode, int workers) {
    const auto schedule = nsg::build_schedule(genus, mode);
    return nsg::run_parallel(schedule, workers);
}

void append_csv(const std::string& path, int genus, const std::string& mode, const nsg::ParallelResult& r,
                long long ms, int workers) {
    namespace fs = std::filesystem;
    std::error_code ec;
    const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw IoError("cannot open " + path + " for appending");
    if (fresh)
        out << "genus,mode,count,visited,encoded,trimmed,wall_time_ms,workers\n";
    out << genus << ',' << mode << ',' << r.count << ',' << r.stats.visited_nodes << ',' << r.stats.encoded_nodes
        << ',' << r.stats.trimmed_nodes << ',' << ms << ',' << workers << '\n';
    if (!out)
        throw IoError("write to " + path + " failed");
}

int cmd_count(int genus, std::string mode, int workers, const std::string& stats_out) {
    if (mode == "unleaved" && genus < 8) {
        std::cerr << "genus " << genus << " is below 8, counting with the complete tree\n";
        mode = "complete";
    }
    const auto start = std::chrono::steady_clock::now();
    const auto r = run(genus, mode == "unleaved" ? nsg::ExploreMode::UnleavedCount : nsg::ExploreMode::Complete, workers);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << r.count << '\n';
    if (!stats_out.empty())
        append_csv(stats_out, genus, mode, r, ms, workers);
    std::cerr << "visited " << r.stats.visited_nodes << ", encoded " << r.stats.encoded_nodes << ", trimmed "
              << r.stats.trimmed_nodes << ", " << ms << " ms\n";
    return Ok;
}

int cmd_verify(int max_genus, int workers) {
    std::uint64_t last = 0;
    for (int g = 1; g <= max_genus; ++g) {
        const auto oracle = nsg::oracle_count(g).count;
        const auto complete = run(g, nsg::ExploreMode::Complete, workers).count;
        const bool has_unleaved = g >= 8;
        const auto unleaved = has_unleaved ? run(g, nsg::ExploreMode::UnleavedCount, workers).count : complete;
        const bool ok = oracle == complete && complete == unleaved;
        std::cout << (ok ? "PASS" : "FAIL") << " genus " << g << ": oracle " << oracle << ", complete " << complete;
        if (has_unleaved)
            std::cout << ", unleaved " << unleaved;
        std::cout << '\n';
        if (!ok) {
            std::cout << "first mismatch at genus " << g << '\n';
            return Mismatch;
        }
        last = oracle;
    }
    std::cout << "all " << max_genus << " genera agree; n_" << max_genus << " = " << last << '\n';
    return Ok;
}

int cmd_export_dot(int genus, const std::string& variant, const std::string& out_path) {
    const auto tree = nsg::build_tree_export(genus, nsg::parse_variant(variant));
    std::ofstream out(out_path);
    if (!out)
        throw IoError("cannot open " + out_path + " for writing");
    out << nsg::to_dot(tree);
    out.close();
    if (!out)
        throw IoError("write to " + out_path + " failed");
    std::cerr << tree.nodes.size() << " nodes, " << tree.edges.size() << " edges\n";
    return Ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical semigroups by genus"};
    app.require_subcommand(1);

    int genus = 0;
    std::string mode = "unleaved";
    int workers = nsg::default_workers();
    std::string stats_out;
    auto* count = app.add_subcommand("count", "Count the semigroups of a given genus");
    count->add_option("--genus", genus, "Target genus")->required()->check(CLI::Range(1, 77));
    count->add_option("--mode", mode, "Exploration mode")->check(CLI::IsMember({"complete", "unleaved"}));
    count->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    count->add_option("--stats-out", stats_out, "Append a CSV row of statistics to this file");

    int max_genus = 0;
    auto* verify = app.add_subcommand("verify", "Compare brute force, complete and unleaved counts");
    verify->add_option("--max-genus", max_genus, "Check genera 1..max")->required()->check(CLI::Range(1, 40));
    verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

    std::string variant = "complete";
    std::string out_path;
    auto* dot = app.add_subcommand("export-dot", "Write a small tree as a DOT graph");
    dot->add_option("--genus", genus, "Depth of the tree")->required()->check(CLI::Range(0, 12));
    dot->add_option("--variant", variant, "Which tree")->check(CLI::IsMember({"complete", "unleaved", "difference"}));
    dot->add_option("--out", out_path, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        if (*count)
            return cmd_count(genus, mode, workers, stats_out);
        if (*verify)
            return cmd_verify(max_genus, workers);
        return cmd_export_dot(genus, variant, out_path);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Io;
    } catch (const nsg::OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    }
}
