#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotsys {

/// Exit codes of the command line tool.
enum ExitCode { exit_pass = 0, exit_fail = 1, exit_input = 2 };

/// Fixture directory: $ROTSYS_FIXTURE_DIR when set, else the shipped data.
std::string fixture_dir();

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

/// The acceptance checks against the fixtures in `dir`, in order.
std::vector<CriterionResult> run_acceptance(const std::string& dir);

/// "PASS  3  O28 cascade: ..." style line.
std::string format_criterion(const CriterionResult& c);

}  // namespace rotsys
