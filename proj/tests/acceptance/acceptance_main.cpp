// Prints one line per acceptance criterion; exit status 1 if any failed.
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gpdrep/cli.hpp"
#include "gpdrep/verify/acceptance.hpp"

int main() {
  gpdrep::verify::SuiteOptions options;
  options.fixture_dir = gpdrep::verify::default_fixture_dir();
  // the `check` command runs the suite itself, without this hook
  options.cli_check = [dir = options.fixture_dir] {
    std::ostringstream out, err;
    const int code = gpdrep::cli::run({"check", dir + "/p2.gpd", dir + "/r.grep"}, out, err);
    if (code == gpdrep::cli::kExitOk) {
      return std::string();
    }
    return "`gpdrep check` exited with " + std::to_string(code) + ": " + err.str() + out.str();
  };

  bool ok = true;
  for (const auto& r : gpdrep::verify::run_acceptance_suite(options)) {
    const char* verdict = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    std::cout << verdict << ' ' << r.id << ' ' << r.title << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s)";
    if (!r.detail.empty()) {
      std::cout << ": " << r.detail;
    }
    std::cout << std::endl;
    ok = ok && (r.passed || r.skipped);
  }
  return ok ? 0 : 1;
}
