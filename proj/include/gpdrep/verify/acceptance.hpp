#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpdrep/groupoid.hpp"
#include "gpdrep/selfmap.hpp"
#include "gpdrep/transfer.hpp"

namespace gpdrep::verify {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  /// Not evaluated (e.g. S_G(α) too large); never counts as a failure.
  bool skipped = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  /// Directory holding the .gpd/.grep corpus.
  std::string fixture_dir;
  /// Extra AC9 step, e.g. running the `check` command. Returns an empty
  /// string on success and a failure description otherwise.
  std::function<std::string()> cli_check;
};

/// Corpus location baked in at build time.
std::string default_fixture_dir();

/// AC1 to AC9, in order, one result each.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options);

/// The transfer invariants for one representation: both round trips, choice
/// independence, locality, the triangle, S_G agreement and functoriality.
std::vector<CriterionResult> run_transfer_invariants(
    const FiniteGroupoid& G, const GroupoidRep& phi,
    std::uint64_t max_space = kDefaultSelfMapSpace);

}  // namespace gpdrep::verify
