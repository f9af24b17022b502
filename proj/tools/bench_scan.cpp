// Compares the serial reference scan against the OpenMP scan on a generated
// corpus and reports throughput for both.

#include <chrono>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "nonsep/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nonsep;

namespace {

double seconds_of(const std::function<ScanOutcome()>& fn, ScanOutcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scan benchmark: serial reference vs OpenMP"};
    int count = 2000, n = 40, min_degree = 10, jobs = 0, m = 6, r = 2, s = 2;
    std::string shape = "dstar";
    std::uint64_t seed = 42;
    app.add_option("--count", count);
    app.add_option("--n", n);
    app.add_option("--min-degree", min_degree);
    app.add_option("--jobs", jobs, "0 = all hardware threads");
    app.add_option("--shape", shape)->check(CLI::IsMember({"star", "dstar"}));
    app.add_option("--m", m);
    app.add_option("--r", r);
    app.add_option("--s", s);
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs <= 0) jobs = omp_get_max_threads();
#else
    if (jobs <= 0) jobs = 1;
    std::cout << "built without OpenMP; the parallel path degrades to serial\n";
#endif

    std::cout << "generating " << count << " graphs (n=" << n << ", min degree " << min_degree
              << ")...\n";
    std::vector<std::string> lines(count);
    for (int i = 0; i < count; ++i)
        lines[i] = serialize_graph6(gen_hypothesis_graph(n, min_degree, seed + i));

    ScanOptions opt;
    opt.spec = shape == "star" ? TreeSpec::star(m)
                               : TreeSpec::double_star(m, std::min(r, s), std::max(r, s));
    opt.include_timing = false;

    ScanOutcome serial, parallel;
    double ts = seconds_of([&] { return run_scan_serial(lines, opt); }, serial);
    opt.jobs = jobs;
    double tp = seconds_of([&] { return run_scan(lines, opt); }, parallel);

    bool identical = serial.records == parallel.records;
    std::cout << "serial   : " << ts << " s  (" << count / ts << " graphs/s)\n";
    std::cout << "parallel : " << tp << " s  (" << count / tp << " graphs/s, jobs=" << jobs
              << ")\n";
    std::cout << "speedup  : " << ts / tp << "x\n";
    std::cout << "outputs identical: " << (identical ? "yes" : "NO") << "\n";
    std::cout << "misses: " << serial.summary.misses
              << ", max iterations: " << serial.summary.max_iterations << "\n";
    return identical && serial.summary.clean() ? 0 : 1;
}
