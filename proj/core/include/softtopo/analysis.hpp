#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtopo/topology.hpp"

namespace softtopo {

// ---------------------------------------------------------------------------
// Covers and semicompactness
// ---------------------------------------------------------------------------

struct CoverReport {
  bool is_cover = false;
  bool is_semiopen_cover = false;
  /// Minimum-size subcover (ascending indices); present iff is_cover.
  std::optional<std::vector<std::size_t>> minimal_subcover;
  /// Every nonempty finite subfamily has a nonnull intersection.
  bool fip_holds = true;
  /// Smallest subfamily with null intersection when fip_holds is false.
  std::vector<std::size_t> fip_violation;
};

CoverReport analyze_cover(const SoftTopology& tau, const SoftSet& carrier,
                          std::span<const SoftSet> family);

struct SemicompactReport {
  /// Always true: every cover of a finite space is finite.
  bool semicompact = true;
  /// Every family of semiclosed sets with the FIP has nonnull intersection.
  bool semiclosed_fip_characterization = true;
  /// For every family with the FIP, the intersection of semi-closures is
  /// nonnull.
  bool sscl_fip_characterization = true;
  std::size_t semiclosed_families_checked = 0;
  std::size_t soft_families_checked = 0;
  /// True when every subfamily of SCSS was enumerated.
  bool exhaustive = false;
  std::string note;
};

/// Semiclosed subfamilies are enumerated exhaustively when SCSS has at most
/// `exhaustive_limit` members, otherwise `samples` of them are drawn.
SemicompactReport is_semicompact(const SoftTopology& tau,
                                 std::uint64_t seed = 0,
                                 std::size_t samples = 256,
                                 std::size_t exhaustive_limit = 12);

// ---------------------------------------------------------------------------
// Semiconnectedness
// ---------------------------------------------------------------------------

struct Semiseparation {
  SoftSet first;
  SoftSet second;
};

/// First G in SOSS (canonical order), G not null or the carrier, whose
/// complement is semiopen too; returned as (G, G^c).
std::optional<Semiseparation> find_semiseparation(const SoftTopology& tau);

/// Independent detector: pair search over SOSS x SOSS for disjoint nonnull
/// members whose union is the carrier.
std::optional<Semiseparation> find_semiseparation_by_pairs(
    const SoftTopology& tau);

/// Nonnull proper soft set that is both semiopen and semiclosed.
std::optional<SoftSet> find_semi_clopen(const SoftTopology& tau);

/// Members K, H of `family` that both meet `part`, are disjoint on `part`
/// and together cover `part`.
std::optional<std::pair<Mask, Mask>> find_relative_separation(
    Mask part, std::span<const Mask> family);

// ---------------------------------------------------------------------------
// Separation axioms
// ---------------------------------------------------------------------------

enum class Axiom {
  semi_T0,
  semi_T1,
  semi_T2,
  semiregular,
  semi_T3,
  seminormal,
  semi_T4,
  semiconnected,
  semicompact,
};

inline constexpr std::array<Axiom, 9> kAllAxioms = {
    Axiom::semi_T0,    Axiom::semi_T1,     Axiom::semi_T2,
    Axiom::semiregular, Axiom::semi_T3,    Axiom::seminormal,
    Axiom::semi_T4,    Axiom::semiconnected, Axiom::semicompact,
};

std::string_view axiom_label(Axiom axiom);
/// Throws InvalidInput on an unknown identifier.
Axiom parse_axiom(std::string_view label);

/// Named soft sets showing an axiom failure, e.g. {"p", point}, {"F", set}.
struct AxiomWitness {
  std::vector<std::pair<std::string, SoftSet>> parts;
};

struct AxiomResult {
  Axiom axiom = Axiom::semi_T0;
  bool holds = true;
  /// First witness only, or all of them with `all_witnesses`.
  std::vector<AxiomWitness> witnesses;
  std::size_t violations = 0;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  const AxiomResult& operator[](Axiom axiom) const;
  bool holds(Axiom axiom) const { return (*this)[axiom].holds; }
};

/// Exhaustive quantification over soft points of the carrier, SOSS and
/// SCSS. Points are singletons at one parameter; two points are distinct
/// when they differ as soft sets.
AxiomResult check_axiom(const SoftTopology& tau, Axiom axiom,
                        bool all_witnesses = false);
AxiomReport check_axioms(const SoftTopology& tau, bool all_witnesses = false);

struct CharacterizationResult {
  bool holds = true;
  /// (F, G): semiclosed F inside semiopen G with no semiopen H satisfying
  /// F ⊆ H and sscl(H) ⊆ G.
  std::optional<std::pair<SoftSet, SoftSet>> witness;
  std::size_t violations = 0;
};

/// For every semiclosed F inside a semiopen G there is a semiopen H with
/// F ⊆ H and sscl(H) ⊆ G. Pairs are visited so that the first failure is
/// (F, K^c) for the first seminormality failure (F, K).
CharacterizationResult seminormal_characterization(const SoftTopology& tau);

}  // namespace softtopo
