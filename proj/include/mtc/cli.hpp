#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtc/classes.hpp"
#include "mtc/theorems.hpp"

namespace mtc::cli {

enum class ReportFormat { human, machine };

/// One renderable result: a theorem report, or a class-check verdict under
/// the class id it ran as.
struct ReportItem {
    std::optional<TheoremReport> theorem;
    std::optional<Verdict> verdict;
    std::string class_id;
    std::uint64_t seed = 0;

    static ReportItem from(const TheoremReport& report, std::uint64_t seed = 0);
    static ReportItem from(std::string class_id, const Verdict& verdict, std::uint64_t seed = 0);
};

/// Machine format: a JSON array, one object per report, keys in fixed order
/// (theorem_id/class_id, lhs, rhs, margin, lhs_error, rhs_error, status,
/// witness, evals, seed), numbers serialized to 17 significant digits so
/// they re-parse bit-exactly. Human format: an aligned table carrying the
/// same numbers.
std::string emit_report(const std::vector<ReportItem>& items, ReportFormat format);

/// Exit codes: 0 all checks satisfied / holds, 1 violation or falsification
/// witness found, 2 usage or parse error, 3 numerical failure
/// (non-convergence, undefined evaluation, unresolved margin).
struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// One CLI invocation; args exclude the program name. Nothing is printed,
/// the stdout/stderr payloads are returned.
RunResult run(const std::vector<std::string>& args);

/// Wrapper for main(): runs, prints, returns the exit code.
int run_main(int argc, char** argv);

} // namespace mtc::cli
