#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfinetti/qcore.hpp"

namespace qfinetti {

struct VerifyOptions {
  int max_n = 10;
  std::vector<QParam> qs;
  /// Largest k used by the bound suites.
  int max_k = 4;
  /// Random measures (seeds 0..random_seeds-1) per n.
  int random_seeds = 10;
  /// Suites that tabulate all 2^n words stop at this n.
  int dense_limit = 12;
  /// Perturbs one closed-form value so the harness must report a failure.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return !counterexample; }
};

/// Runs every invariant suite: q-binomial generating function, exchangeability
/// of constructed measures, closed-form projections against dense
/// pushforwards, the closed-form distance, the upper/lower rate bounds and
/// the technical lemma, the theorem on random measures, and the decomposition
/// round trip. Each suite stops at its first counterexample.
std::vector<SuiteResult> run_verify_all(const VerifyOptions& options);

}  // namespace qfinetti
