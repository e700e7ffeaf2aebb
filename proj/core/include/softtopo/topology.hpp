#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "softtopo/soft_set.hpp"

namespace softtopo {

namespace detail {
struct TopologyAccess;
}

/// First axiom a candidate open family breaks, with the sets that show it.
struct TopologyViolation {
  enum class Axiom {
    outside_carrier,
    missing_null,
    missing_absolute,
    union_closure,
    intersection_closure,
  };
  Axiom axiom;
  std::vector<SoftSet> witnesses;

  std::string describe() const;
};

std::string_view axiom_name(TopologyViolation::Axiom axiom);

/// Thrown by the throwing constructors when a family is not a topology.
class InvalidTopology : public InvalidInput {
 public:
  explicit InvalidTopology(TopologyViolation violation);
  const TopologyViolation& violation() const noexcept { return violation_; }

 private:
  TopologyViolation violation_;
};

/// A validated soft topology. The carrier is U_A for a space and the
/// subspace carrier for a relative topology; complements and closures are
/// taken inside the carrier. Immutable; copies share state.
class SoftTopology {
 public:
  /// Validates `opens` over the absolute carrier; throws InvalidTopology.
  SoftTopology(const SpaceSignature& sig, std::span<const SoftSet> opens);

  const SpaceSignature& signature() const noexcept;
  Mask carrier_mask() const noexcept;
  SoftSet carrier() const;
  /// Deduplicated open sets in canonical order.
  std::span<const Mask> open_masks() const noexcept;
  std::vector<SoftSet> opens() const;
  std::size_t size() const noexcept;

  bool is_open(Mask m) const;
  bool is_closed(Mask m) const;
  bool is_open(const SoftSet& g) const;
  bool is_closed(const SoftSet& g) const;
  bool is_full_space() const noexcept;
  bool is_discrete() const noexcept;
  bool is_indiscrete() const noexcept;

  /// Smallest open set containing each cell, indexed by cell; 0 outside
  /// the carrier.
  std::span<const Mask> neighborhoods() const noexcept;

  Mask complement(Mask m) const noexcept;
  /// Largest open subset of m (m is first clipped to the carrier).
  Mask interior(Mask m) const noexcept;
  /// Smallest closed superset of m inside the carrier.
  Mask closure(Mask m) const noexcept;

  /// Canonical text form: labels, carrier encoding, sorted open encodings.
  std::string encoding() const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b);

 private:
  struct Impl;
  explicit SoftTopology(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend struct detail::TopologyAccess;
};

/// Checks the axioms: contains null and carrier, closed under pairwise
/// union and intersection (enough for a finite family).
std::variant<SoftTopology, TopologyViolation> validate_topology(
    const SpaceSignature& sig, std::span<const SoftSet> candidate);

/// Same, relative to a carrier other than U_A.
std::variant<SoftTopology, TopologyViolation> validate_topology(
    const SoftSet& carrier, std::span<const SoftSet> candidate);

SoftSet interior(const SoftTopology& tau, const SoftSet& g);
SoftSet closure(const SoftTopology& tau, const SoftSet& g);

/// Relative topology {O ∩ carrier}; the new carrier is carrier ∩ tau's.
SoftTopology subspace(const SoftTopology& tau, const SoftSet& carrier);

/// True iff every open set is a union of members of `basis`. Throws
/// InvalidInput if a member is not open.
bool is_basis(const SoftTopology& tau, std::span<const SoftSet> basis);

/// Smallest topology containing `seeds`. Throws CapExceeded when the result
/// would have more than 2^cap members.
SoftTopology from_subbasis(const SpaceSignature& sig,
                           std::span<const SoftSet> seeds,
                           unsigned cap = bit_cap());

SoftTopology indiscrete_topology(const SpaceSignature& sig);
SoftTopology discrete_topology(const SpaceSignature& sig,
                               unsigned cap = bit_cap());

}  // namespace softtopo
