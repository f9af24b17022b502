#include "nonsep/scan.hpp"

#include <chrono>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nonsep {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Method m) { return m == Method::finder ? "finder" : "oracle"; }

namespace {

ordered_json tree_to_json(const TreeVariant& t) {
    ordered_json j;
    if (const auto* s = std::get_if<StarTree>(&t)) {
        j["kind"] = "star";
        j["root"] = s->root;
        j["leaves"] = s->leaves.ids();
    } else {
        const auto& d = std::get<DoubleStarTree>(t);
        j["kind"] = "dstar";
        j["u"] = d.u;
        j["v"] = d.v;
        j["u_leaves"] = d.u_leaves.ids();
        j["v_leaves"] = d.v_leaves.ids();
    }
    return j;
}

struct RecordStats {
    bool parse_error = false;
    bool hypo_fail = false;
    bool found = false;
    bool miss = false;
    bool disagreement = false;
    long long iterations = 0;
};

std::string scan_one(long long index, const std::string& line, const ScanOptions& opt,
                     RecordStats& stats) {
    ordered_json rec;
    rec["v"] = 1;
    rec["index"] = index;
    rec["graph"] = line;

    auto t0 = std::chrono::steady_clock::now();
    Graph g;
    try {
        g = parse_graph6(line);
    } catch (const parse_error& e) {
        stats.parse_error = true;
        rec["error"] = e.what();
        rec["hypotheses_ok"] = false;
        rec["ok"] = false;
        return rec.dump();
    }

    bool hypo = g.vertex_count() > 0 && g.min_degree() >= opt.spec.m + 2 && is_k_connected(g, 2);
    rec["hypotheses_ok"] = hypo;
    rec["method"] = to_string(opt.method);
    stats.hypo_fail = !hypo;

    bool ok = false;
    bool verified = false;
    std::optional<TreeVariant> tree;
    ordered_json trace = ordered_json::array();

    if (opt.method == Method::finder) {
        if (hypo) {
            try {
                auto res = run_to_fixpoint(g, opt.spec);
                ok = true;
                tree = res.state.tree;
                stats.iterations = res.state.iteration;
                for (const auto& e : res.trace) {
                    ordered_json step;
                    step["claim"] = to_string(e.tag);
                    step["block_size"] = e.pot.block_size;
                    step["top_component"] =
                        e.pot.component_sizes.empty() ? 0 : e.pot.component_sizes.front();
                    trace.push_back(std::move(step));
                }
            } catch (const search_failure& e) {
                rec["error"] = e.what();
            }
        }
    } else {
        auto rep = oracle_find(g, opt.spec);
        ok = rep.exists;
        tree = rep.witness;
        rec["candidates_checked"] = rep.n_candidates;
    }

    if (tree) {
        verified = verify_tree(g, *tree, opt.spec) &&
                   is_biconnected(remove_vertices(g, tree_vertices(*tree)).graph);
        rec["tree"] = tree_to_json(*tree);
    } else {
        rec["tree"] = nullptr;
    }
    rec["ok"] = ok;
    rec["iterations"] = stats.iterations;
    rec["trace"] = std::move(trace);
    rec["verified"] = verified;

    stats.found = ok;
    stats.miss = hypo && !(ok && verified);

    // the comparison is only meaningful when the finder actually ran
    if (opt.cross_check && opt.method == Method::finder && hypo) {
        auto rep = oracle_find(g, opt.spec);
        bool agree = (ok == rep.exists) && (!ok || verified);
        rec["oracle_exists"] = rep.exists;
        rec["cross_check_ok"] = agree;
        stats.disagreement = !agree;
    }

    if (opt.include_timing) {
        auto t1 = std::chrono::steady_clock::now();
        rec["millis"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return rec.dump();
}

ScanOutcome assemble(std::vector<std::string> records, const std::vector<RecordStats>& stats) {
    ScanOutcome out;
    out.records = std::move(records);
    out.summary.total = static_cast<long long>(out.records.size());
    for (const auto& s : stats) {
        out.summary.found += s.found;
        out.summary.misses += s.miss;
        out.summary.hypothesis_failures += s.hypo_fail;
        out.summary.parse_errors += s.parse_error;
        out.summary.disagreements += s.disagreement;
        out.summary.max_iterations = std::max(out.summary.max_iterations, s.iterations);
    }
    return out;
}

void validate_scan_options(const ScanOptions& opt) {
    if (opt.method != Method::finder) return;
    if (opt.spec.kind == TreeKind::star && opt.spec.m < 4)
        throw hypothesis_error(
            "the finder requires star order m >= 4; the oracle method handles m = 3");
    if (opt.spec.kind == TreeKind::double_star && opt.spec.m < 5)
        throw hypothesis_error(
            "the finder requires double-star order m >= 5; the oracle method handles m = 4");
}

}  // namespace

ScanOutcome run_scan_serial(const std::vector<std::string>& lines, const ScanOptions& opt) {
    validate_scan_options(opt);
    std::vector<std::string> records(lines.size());
    std::vector<RecordStats> stats(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        records[i] = scan_one(static_cast<long long>(i), lines[i], opt, stats[i]);
    return assemble(std::move(records), stats);
}

ScanOutcome run_scan(const std::vector<std::string>& lines, const ScanOptions& opt) {
#ifdef _OPENMP
    if (opt.jobs > 1) {
        validate_scan_options(opt);
        std::vector<std::string> records(lines.size());
        std::vector<RecordStats> stats(lines.size());
        long long n = static_cast<long long>(lines.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opt.jobs)
        for (long long i = 0; i < n; ++i)
            records[i] = scan_one(i, lines[i], opt, stats[i]);
        return assemble(std::move(records), stats);
    }
#endif
    return run_scan_serial(lines, opt);
}

std::string summary_json(const ScanSummary& s) {
    ordered_json j;
    j["v"] = 1;
    j["type"] = "summary";
    j["total"] = s.total;
    j["found"] = s.found;
    j["misses"] = s.misses;
    j["hypothesis_failures"] = s.hypothesis_failures;
    j["parse_errors"] = s.parse_errors;
    j["disagreements"] = s.disagreements;
    j["max_iterations"] = s.max_iterations;
    return j.dump();
}

std::string tree_json(const TreeVariant& t) { return tree_to_json(t).dump(); }

}  // namespace nonsep
