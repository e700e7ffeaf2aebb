#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtopo/soft_map.hpp"
#include "softtopo/topology.hpp"

namespace softtopo {

/// Asserted invariants must hold on every instance; a failure is a bug.
/// Under-test claims are searched for counterexamples and only reported.
enum class Tier { asserted, under_test };
enum class ClaimStatus { holds, refuted, exhausted };

std::string_view tier_label(Tier tier);
std::string_view status_label(ClaimStatus status);

struct ClaimInfo {
  std::string_view id;
  Tier tier;
  std::string_view statement;
  /// What a single case ranges over.
  std::string_view scope;
  /// Non-empty for claims evaluated once on a named fixture rather than on
  /// every corpus instance.
  std::string_view fixture;
};

/// Every registered claim, in report order.
std::span<const ClaimInfo> claim_registry();
/// Throws InvalidInput for an unknown id.
const ClaimInfo& find_claim(std::string_view id);

/// Interpretations adopted where the definitions leave room; every report
/// header lists them.
std::span<const std::string_view> adopted_semantics();

struct ClaimWitness {
  SoftTopology space;
  /// "<corpus index>:<instance id>" or a fixture name.
  std::string instance;
  std::vector<std::pair<std::string, SoftSet>> sets;
  /// Subspace carrier, for claims quantified over subspaces.
  std::optional<SoftSet> carrier;
  std::optional<SoftTopology> target;
  std::optional<SoftFunction> function;
  std::string note;
};

struct ClaimRecord {
  const ClaimInfo* claim = nullptr;
  ClaimStatus status = ClaimStatus::exhausted;
  std::size_t instances = 0;
  /// Instances with at least one case whose hypothesis held.
  std::size_t hypothesis_instances = 0;
  std::size_t failing_instances = 0;
  std::size_t cases = 0;
  std::size_t hypothesis_cases = 0;
  /// First failure in corpus order.
  std::optional<ClaimWitness> witness;
  /// Bundle directory relative to the witness root, once written.
  std::string witness_path;
};

struct SuiteOptions {
  /// Claim ids to run; empty runs the whole registry (after `tier`).
  std::vector<std::string> claims;
  std::optional<Tier> tier;
  unsigned jobs = 1;
};

struct SuiteReport {
  std::string fingerprint;
  std::size_t instance_count = 0;
  std::vector<ClaimRecord> records;

  std::size_t asserted_failures() const;
  /// Every selected claim executed at least once.
  bool coverage_complete() const;
};

/// Evaluates the selected claims on every instance. Workers shard by
/// instance and results merge in corpus order, so the report does not
/// depend on `jobs`. Throws InvalidInput for unknown claim ids.
SuiteReport run_claim_suite(std::span<const SoftTopology> corpus,
                            const SuiteOptions& options = {});

enum class ReportFormat { text, json };
std::string format_report(const SuiteReport& report, ReportFormat format);

/// Writes a replayable bundle for each refuted record to
/// root/<claim id>/0/ and records the relative path in the record.
void write_witnesses(SuiteReport& report, const std::filesystem::path& root);
void write_witness_bundle(const ClaimRecord& record,
                          const std::filesystem::path& dir);

/// Re-evaluates a bundle's claim on its saved space, restricted to the
/// saved function and subspace carrier.
ClaimRecord replay_witness(const std::filesystem::path& dir);

}  // namespace softtopo
