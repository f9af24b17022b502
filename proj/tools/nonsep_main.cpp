#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nonsep/scan.hpp"
#include "nonsep/selfcheck.hpp"

using namespace nonsep;

namespace {

// exit codes: 0 found / all good, 1 a guaranteed-to-exist tree was not found
// (or finder and oracle disagree), 2 usage or input error, 3 hypothesis
// violation

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return read_stream(f);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

struct ShapeFlags {
    std::string shape = "star";
    int m = 0;
    int r = 0, s = 0;

    TreeSpec to_spec() const {
        if (shape == "star") return TreeSpec::star(m);
        if (shape == "dstar") {
            if (r <= 0 || s <= 0)
                throw std::invalid_argument("double-star shape requires --r and --s");
            return TreeSpec::double_star(m, std::min(r, s), std::max(r, s));
        }
        throw std::invalid_argument("unknown shape: " + shape);
    }
};

void add_shape_flags(CLI::App* cmd, ShapeFlags& f) {
    cmd->add_option("--shape", f.shape, "Tree shape: star or dstar")
        ->check(CLI::IsMember({"star", "dstar"}));
    cmd->add_option("--m", f.m, "Tree order")->required();
    cmd->add_option("--r", f.r, "Double-star leaves at one center");
    cmd->add_option("--s", f.s, "Double-star leaves at the other center");
}

int default_jobs() {
    if (const char* env = std::getenv("NONSEP_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

int cmd_find(const ShapeFlags& shape, const std::string& input, const std::string& format,
             const std::string& method, bool as_json) {
    TreeSpec spec = shape.to_spec();
    std::string text = read_input(input);
    Graph g;
    if (format == "g6") {
        auto lines = split_lines(text);
        if (lines.empty()) throw parse_error("no graph6 line in input");
        g = parse_graph6(lines.front());
    } else {
        g = parse_edgelist(text);
    }

    ScanOptions opt;
    opt.spec = spec;
    opt.method = method == "oracle" ? Method::oracle : Method::finder;
    auto outcome = run_scan_serial({serialize_graph6(g)}, opt);
    if (as_json)
        std::cout << outcome.records.front() << '\n';

    bool hypo = outcome.summary.hypothesis_failures == 0;
    bool found = outcome.summary.found == 1;
    if (!as_json) {
        if (found)
            std::cout << "found (iterations=" << outcome.summary.max_iterations << ")\n";
        else if (!hypo)
            std::cout << "hypotheses not satisfied (need 2-connected, min degree >= m+2)\n";
        else
            std::cout << "NOT FOUND despite hypotheses; this should be impossible\n";
    }
    if (found) return 0;
    return hypo ? 1 : 3;
}

int cmd_scan(const ShapeFlags& shape, const std::string& input, int jobs,
             const std::string& report_path, const std::string& method, bool cross_check,
             bool no_timing) {
    ScanOptions opt;
    opt.spec = shape.to_spec();
    opt.method = method == "oracle" ? Method::oracle : Method::finder;
    opt.cross_check = cross_check;
    opt.jobs = jobs;
    opt.include_timing = !no_timing;

    auto lines = split_lines(read_input(input));
    auto outcome = run_scan(lines, opt);

    std::ofstream report_file;
    std::ostream* out = &std::cout;
    if (!report_path.empty()) {
        report_file.open(report_path);
        if (!report_file) throw std::runtime_error("cannot open report file: " + report_path);
        out = &report_file;
    }
    for (const auto& rec : outcome.records) *out << rec << '\n';
    *out << summary_json(outcome.summary) << '\n';

    std::cerr << "scanned " << outcome.summary.total << ": found " << outcome.summary.found
              << ", hypothesis failures " << outcome.summary.hypothesis_failures
              << ", parse errors " << outcome.summary.parse_errors << ", misses "
              << outcome.summary.misses << ", disagreements "
              << outcome.summary.disagreements << ", max iterations "
              << outcome.summary.max_iterations << '\n';
    return outcome.summary.clean() ? 0 : 1;
}

int cmd_gen(int n, int min_degree, long long count, std::uint64_t seed,
            const std::string& output) {
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
        out_file.open(output);
        if (!out_file) throw std::runtime_error("cannot open output file: " + output);
        out = &out_file;
    }
    for (long long i = 0; i < count; ++i)
        *out << serialize_graph6(gen_hypothesis_graph(n, min_degree, seed + i)) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-separating star and double-star toolkit"};
    app.require_subcommand(1);

    ShapeFlags find_shape;
    std::string find_input = "-", find_format = "g6", find_method = "finder";
    bool find_json = false;
    auto* find = app.add_subcommand("find", "Find a tree whose removal keeps the graph 2-connected");
    add_shape_flags(find, find_shape);
    find->add_option("--input", find_input, "Input file or - for stdin");
    find->add_option("--format", find_format)->check(CLI::IsMember({"g6", "edgelist"}));
    find->add_option("--method", find_method)->check(CLI::IsMember({"finder", "oracle"}));
    find->add_flag("--json", find_json, "Print the record as JSON");

    ShapeFlags scan_shape;
    std::string scan_input = "-", scan_report, scan_method = "finder";
    int scan_jobs = default_jobs();
    bool scan_cross = false, scan_no_timing = false;
    auto* scan = app.add_subcommand("scan", "Scan a graph6 corpus, one JSON record per line");
    add_shape_flags(scan, scan_shape);
    scan->add_option("--input", scan_input, "Input file or - for stdin");
    scan->add_option("--jobs", scan_jobs, "Worker threads (default: NONSEP_JOBS or 1)");
    scan->add_option("--report", scan_report, "Write JSONL report here instead of stdout");
    scan->add_option("--method", scan_method)->check(CLI::IsMember({"finder", "oracle"}));
    scan->add_flag("--cross-check", scan_cross, "Also run the oracle and compare");
    scan->add_flag("--no-timing", scan_no_timing, "Omit millis for byte-stable reports");

    int gen_n = 0, gen_min_degree = 0;
    long long gen_count = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Generate 2-connected graphs with a degree floor");
    gen->add_option("--n", gen_n, "Vertex count")->required();
    gen->add_option("--min-degree", gen_min_degree, "Minimum degree")->required();
    gen->add_option("--count", gen_count, "Number of graphs");
    gen->add_option("--seed", gen_seed, "Seed; graph i uses seed + i");
    gen->add_option("--output", gen_output, "Output file (default stdout)");

    auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (find->parsed())
            return cmd_find(find_shape, find_input, find_format, find_method, find_json);
        if (scan->parsed())
            return cmd_scan(scan_shape, scan_input, scan_jobs, scan_report, scan_method,
                            scan_cross, scan_no_timing);
        if (gen->parsed()) return cmd_gen(gen_n, gen_min_degree, gen_count, gen_seed, gen_output);
        if (selfcheck->parsed()) return run_selfcheck(std::cout) ? 0 : 4;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << '\n';
        return 3;
    } catch (const search_failure& e) {
        std::cerr << "search failure: " << e.what() << '\n';
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
