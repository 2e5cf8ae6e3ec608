#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chromakit/bigint.hpp"
#include "chromakit/oracle.hpp"

namespace chromakit {

struct VerifyOptions {
    std::size_t n_max = 8;
    std::int64_t lambda_max = 5;
    bool include_oracle = true;
    /// The oracle is only consulted for n <= oracle_n_max and
    /// λ <= oracle_lambda_max; the other methods always run.
    std::size_t oracle_n_max = SIZE_MAX;
    std::int64_t oracle_lambda_max = INT64_MAX;
    std::uint64_t oracle_budget = budget::kMaxAssignments;
};

struct VerifyFailure {
    std::size_t n = 0;
    std::int64_t lambda = 0;
    std::string method;
    BigInt got;
    BigInt expected;
};

struct VerifyReport {
    VerifyOptions options;
    bool agreed = true;
    std::vector<VerifyFailure> failures;
    /// Row order of the value table; fixed across runs.
    std::vector<std::string> methods;
    /// table[m][n-1] = value of method m at λ = lambda_max, as a decimal
    /// string; "-" where the method does not apply.
    std::vector<std::vector<std::string>> table;
    /// Wall time accumulated per method, same order as `methods`.
    std::vector<double> timings_ms;
};

/// Runs every computation route over the cycles C_1..C_n_max and compares
/// the counts at each λ in 0..lambda_max. The closed form is the reference;
/// any mismatch is recorded as a failure.
VerifyReport verify_cycle_methods(const VerifyOptions& options);

/// Fixed-width text rendering of the value table plus the verdict line(s).
/// Timing lines are appended only when with_timings is set.
std::string render_verify_report(const VerifyReport& report, bool with_timings = false);

}  // namespace chromakit
