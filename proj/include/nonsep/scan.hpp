#pragma once

#include <string>
#include <vector>

#include "nonsep/finder.hpp"
#include "nonsep/oracle.hpp"

namespace nonsep {

enum class Method { finder, oracle };
const char* to_string(Method m);

struct ScanOptions {
    TreeSpec spec;
    Method method = Method::finder;
    bool cross_check = false;    // also run the oracle and compare existence
    int jobs = 1;                // >1 enables the OpenMP path
    bool include_timing = true;  // drop the millis field for byte-stable reports
};

struct ScanSummary {
    long long total = 0;
    long long found = 0;
    long long misses = 0;      // hypotheses held but nothing was found
    long long hypothesis_failures = 0;
    long long parse_errors = 0;
    long long disagreements = 0;       // finder vs oracle existence mismatches
    long long max_iterations = 0;
    bool clean() const { return misses == 0 && disagreements == 0; }
};

struct ScanOutcome {
    std::vector<std::string> records;  // one JSON line per input line
    ScanSummary summary;
};

/// One record per graph6 line. Records come back in input order regardless of
/// scheduling. jobs > 1 runs the per-line work in an OpenMP parallel loop.
ScanOutcome run_scan(const std::vector<std::string>& lines, const ScanOptions& opt);

/// Plain sequential loop over the same per-line worker. Reference
/// implementation for the parallel path; output must match byte for byte.
ScanOutcome run_scan_serial(const std::vector<std::string>& lines, const ScanOptions& opt);

std::string summary_json(const ScanSummary& s);

std::string tree_json(const TreeVariant& t);

}  // namespace nonsep
