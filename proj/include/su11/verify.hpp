#ifndef SU11_VERIFY_HPP
#define SU11_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace su11 {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;  // optional detail (first failing cell, value, ...)
};

/// Named structural-identity suites run on the standard parameter grid.
/// Each returns one result per check; pass = residual within threshold
/// (sign claims report the worst offending value as the residual).
std::vector<CheckResult> verify_algebra();
std::vector<CheckResult> verify_states(std::uint64_t seed);
std::vector<CheckResult> verify_observables();
std::vector<CheckResult> verify_measures();
std::vector<CheckResult> verify_position();
std::vector<CheckResult> verify_suite(const std::string& name, std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace su11

#endif
