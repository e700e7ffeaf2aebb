#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtopo/analysis.hpp"
#include "softtopo/claims.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/semi.hpp"
#include "softtopo/soft_map.hpp"

namespace softtopo::detail {

struct TargetSpace {
  SoftTopology topology;
  /// All subsets of the target carrier when small, else a sample.
  std::vector<Mask> sets;
  std::optional<bool> seminormal;
};

struct MapCase {
  std::size_t target = 0;
  SoftFunction function;
  MapClassification classes;
  std::uint64_t salt = 0;
};

/// A map case or subspace carrier fixed by a witness bundle.
struct Pinned {
  std::optional<Mask> carrier;
  std::optional<std::pair<SoftTopology, SoftFunction>> map;
};

/// Everything the claim checks need about one instance, computed on first
/// use. Sampling is seeded from the instance encoding and the claim id, so a
/// check sees the same cases in a suite run and in a replay.
class Instance {
 public:
  Instance(SoftTopology tau, std::string name, const Pinned* pinned = nullptr);

  const SoftTopology& tau() const { return tau_; }
  const SpaceSignature& sig() const { return tau_.signature(); }
  const std::string& name() const { return name_; }
  Mask carrier() const { return carrier_; }
  Mask comp(Mask m) const { return carrier_ & ~m; }
  SoftSet set(Mask m) const { return SoftSet(sig(), m); }

  const std::vector<Mask>& so() const { return raw::soss(tau_); }
  const std::vector<Mask>& sc() const { return raw::scss(tau_); }
  bool semiopen(Mask m) const { return raw::semiopen(tau_, m); }
  bool semiclosed(Mask m) const { return raw::semiclosed(tau_, m); }
  Mask ssint(Mask m) const { return raw::ssint(tau_, m); }
  Mask sscl(Mask m) const { return raw::sscl(tau_, m); }
  Mask interior(Mask m) const { return tau_.interior(m); }
  Mask closure(Mask m) const { return tau_.closure(m); }

  /// Every subset of the carrier up to 8 cells, otherwise a sample that
  /// includes the opens, closed sets and semiopen sets.
  const std::vector<Mask>& sets();
  /// All ordered pairs up to 4 cells, otherwise random, nested and
  /// family-drawn pairs.
  const std::vector<std::pair<Mask, Mask>>& pairs();
  /// Subspace carriers: all subsets up to 4 cells, otherwise a sample.
  const std::vector<Mask>& carriers();
  const std::vector<MapCase>& maps();
  TargetSpace& target(std::size_t index);
  const AxiomReport& axioms();
  const SemicompactReport& semicompact();
  const raw::OracleFamilies* oracle();
  bool semiconnected();

  SplitMix64 rng(std::string_view claim, std::uint64_t salt = 0) const;
  /// Uniform subset of `m`.
  static Mask random_subset(SplitMix64& rng, Mask m);

 private:
  void build_maps();

  SoftTopology tau_;
  std::string name_;
  const Pinned* pinned_;
  Mask carrier_;
  std::uint64_t key_;

  std::optional<std::vector<Mask>> sets_;
  std::optional<std::vector<std::pair<Mask, Mask>>> pairs_;
  std::optional<std::vector<Mask>> carriers_;
  std::optional<std::vector<MapCase>> maps_;
  std::vector<TargetSpace> targets_;
  std::optional<AxiomReport> axioms_;
  std::optional<SemicompactReport> semicompact_;
  std::optional<std::optional<raw::OracleFamilies>> oracle_;
  std::optional<bool> semiconnected_;
};

using Parts = std::vector<std::pair<std::string, SoftSet>>;

/// Collects the outcome of one claim on one instance.
class Probe {
 public:
  explicit Probe(Instance& inst) : inst_(inst) {}

  /// Records one case. Returns false once a failure is recorded, so loops
  /// can stop at the first witness.
  template <typename WitnessFn>
  bool check(bool hypothesis, bool conclusion, WitnessFn&& parts,
             std::string_view note = {}) {
    ++cases_;
    if (!hypothesis) return true;
    ++hypothesis_cases_;
    if (conclusion) return true;
    fail(parts(), note);
    return false;
  }
  template <typename WitnessFn>
  bool expect(bool conclusion, WitnessFn&& parts, std::string_view note = {}) {
    return check(true, conclusion, std::forward<WitnessFn>(parts), note);
  }

  void set_map(const MapCase* map) { map_ = map; }
  void set_carrier(std::optional<Mask> carrier) { carrier_ = carrier; }

  bool failed() const { return witness_.has_value(); }
  std::size_t cases() const { return cases_; }
  std::size_t hypothesis_cases() const { return hypothesis_cases_; }
  std::optional<ClaimWitness>& witness() { return witness_; }

 private:
  void fail(Parts parts, std::string_view note);

  Instance& inst_;
  const MapCase* map_ = nullptr;
  std::optional<Mask> carrier_;
  std::size_t cases_ = 0;
  std::size_t hypothesis_cases_ = 0;
  std::optional<ClaimWitness> witness_;
};

using CheckFn = void (*)(Instance&, Probe&);

struct ClaimEntry {
  ClaimInfo info;
  CheckFn check;
};

std::span<const ClaimEntry> claim_entries();
const ClaimEntry& claim_entry(std::string_view id);

}  // namespace softtopo::detail
