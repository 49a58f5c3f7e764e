#pragma once

/// Command implementations behind the polyplan binary. Split from main() so
/// the test suites can drive them directly. Exit codes: 0 success,
/// 1 validation/parse error, 2 property failure.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace polyplan {

struct TcArgs {
    std::string complex_path;
    std::string groups_path;
};

struct PlanArgs {
    std::string complex_path;
    std::string groups_path;
    std::string from_path;
    std::string to_path;
    long samples = 0;
    std::string out_path;
};

struct VerifyArgs {
    std::string complex_path;
    std::string groups_path;
    long trials = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

/// Prints {"cat", "tc", "cat_face", "tc_pair", "weights"} as JSON.
int run_tc(const TcArgs& args, std::ostream& out, std::ostream& err);

/// Writes the sampled path CSV to out_path and a {"j", "cell"} sidecar next
/// to it (extension replaced by .json).
int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err);

/// Writes the cover report JSON to out_path and prints a per-check summary.
int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// Sidecar naming rule used by run_plan.
std::string sidecar_path(const std::string& csv_path);

}  // namespace polyplan
