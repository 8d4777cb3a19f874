#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liederiv/corpus.hpp"

namespace liederiv {

struct CampaignEntry {
  std::string instance;
  std::string suite;
  std::string invariant;
  std::string status;  // "pass", "fail" or "skip"
  std::string details;
};

struct CampaignReport {
  std::vector<CampaignEntry> entries;  // sorted by (instance, suite, invariant)

  bool success() const noexcept;
  std::size_t count(const std::string& status) const noexcept;
};

/// validation, spaces, block_conditions, center, witness, proof_identity,
/// sufficiency, certificates, tau, expectations.
const std::vector<std::string>& campaign_suites();

/// Runs the selected suites (all when `suites` is empty) on every instance.
/// Instances are evaluated concurrently; a validation failure skips the rest of
/// that instance's suites. Throws InputError(usage) on an unknown suite name.
CampaignReport run_campaign(const std::vector<CorpusInstance>& instances, const std::vector<std::string>& suites = {},
                            std::uint64_t seed = 0);

/// Evaluates one named fact (the keys used in CorpusInstance::expected).
/// Returns nullopt for a fact that does not apply to the instance.
std::optional<Expectation::Value> evaluate_fact(const CorpusInstance& inst, const std::string& key);

/// Facts ending in "_at_least" compare with >=, everything else with ==.
bool fact_matches(const std::string& key, const Expectation::Value& expected, const Expectation::Value& actual);

std::string format_fact(const Expectation::Value& v);

}  // namespace liederiv
