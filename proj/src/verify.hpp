#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "halfspace.hpp"

namespace hs {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Numeric arc length of the geodesic between two points: composite Simpson
/// on the metric pullback of finite-difference tangents.
double geodesic_arc_length(const HatPoint& p1, const HatPoint& p2, int panels = 10000);

// The ten property suites. Tolerances are pinned inside each suite; the
// seed feeds every pseudo-random stream so reruns are bit-stable.
SuiteResult suite_distance_closed_form(std::uint64_t seed);
SuiteResult suite_invariance(std::uint64_t seed);
SuiteResult suite_splitting(std::uint64_t seed);
SuiteResult suite_geodesic(std::uint64_t seed);
SuiteResult suite_section_dimensions(std::uint64_t seed);
SuiteResult suite_semicharacter_cocycle(std::uint64_t seed);
SuiteResult suite_theta(std::uint64_t seed);
SuiteResult suite_picard(std::uint64_t seed);
SuiteResult suite_killing(std::uint64_t seed);
SuiteResult suite_action_kernel(std::uint64_t seed);

std::vector<std::string> verify_suite_names();
std::vector<SuiteResult> run_verify(const std::string& suite, std::uint64_t seed);

} // namespace hs
