#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subent/identities.hpp"
#include "subent/quadrature.hpp"

namespace subent {

inline constexpr const char* kRegistryVersion = "1";

struct SuiteConfig {
    int d = 3;
    int samples = 0;  // 0 picks each suite's registered default
    std::uint64_t seed = 42;
    int threads = 1;
    std::optional<double> tol_override;
};

struct SuiteInfo {
    std::string name;
    double tolerance;
    int default_samples;
};

/// Registered suites in execution order, with their pass tolerances.
const std::vector<SuiteInfo>& registered_suites();

bool suite_registered(const std::string& name);

/// Run one registered suite. A suite may emit more than one report (e.g.
/// the scaling relations split into exact identities and e-space
/// inequalities with different tolerances).
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<VerificationReport> run_all_suites(const SuiteConfig& cfg);

}  // namespace subent
