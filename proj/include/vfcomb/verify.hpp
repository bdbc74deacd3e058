#pragma once

// Cross-checks run by `vfcomb verify`. Each suite compares independent
// routes to the same quantity on every degree up to a bound.

#include <string>
#include <vector>

namespace vfcomb {

inline constexpr int kMaxVerifyDegree = 8;

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every suite for degrees up to max_degree, in a fixed order.
/// Throws std::domain_error unless 1 <= max_degree <= kMaxVerifyDegree.
std::vector<SuiteResult> run_verification(int max_degree);

/// c_{d,q} > 0 for all 0 <= q <= 2(d-1) and 1 <= d <= max_degree. Reported
/// alongside the suites; not a proven property.
bool dimension_positivity(int max_degree);

}  // namespace vfcomb
