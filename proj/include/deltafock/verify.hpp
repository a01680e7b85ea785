#ifndef DELTAFOCK_VERIFY_HPP
#define DELTAFOCK_VERIFY_HPP

#include "deltafock/deformation.hpp"

#include <string>
#include <vector>

namespace deltafock {

enum class CheckStatus { pass, fail, reported };

struct Check {
    std::string label;
    std::string reference; // equation tag printed in reports
    CheckStatus status = CheckStatus::pass;
    bool exact = true;     // false: floating check against a tolerance
    std::string detail;
};

struct RunReport {
    std::string suite;
    int s_max = 1;
    std::vector<Check> checks;
    double milliseconds = 0.0;

    /// No check failed; reported checks never count.
    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs "algebra", "fock", "limits" or "all"; throws std::invalid_argument otherwise.
RunReport run_suite(const std::string& suite, const DeformationParam& params);

RunReport algebra_suite(const DeformationParam& params);
RunReport fock_suite(const DeformationParam& params);
RunReport limits_suite(const DeformationParam& params);

std::string status_word(const Check& check);

/// "<reference>: <label> <status>", with any detail appended after " -- ".
std::string format_line(const Check& check);

} // namespace deltafock

#endif // DELTAFOCK_VERIFY_HPP
