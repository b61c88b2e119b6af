#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hamqaoa {

struct SuitePoint {
    std::string series;
    double x = 0.0;
    double y = 0.0;
    double yerr = 0.0;
    long n = 0;
    std::uint64_t seed = 0;
};

struct SuiteResult {
    std::string name;
    std::vector<SuitePoint> points;
    std::string manifest_json;  // seeds, sizes, scale substitutions, per-point failures
};

// Named desk-scale sweeps (fig2..fig7). Every point draws its own seed from
// the master seed by index; a point that trips a resource guard is recorded in
// the manifest and the remaining points still run.
SuiteResult run_suite(const std::string& name, std::uint64_t master_seed);

// Header line "series,x,y,yerr,n,seed" followed by one row per point.
std::string suite_csv(const SuiteResult& result);

}  // namespace hamqaoa
