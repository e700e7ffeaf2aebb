#pragma once

#include <mutex>
#include <unordered_set>
#include <vector>

#include "softtopo/topology.hpp"

namespace softtopo {

namespace detail {

/// Semiopen and semiclosed families of one topology, filled on first use.
struct SemiFamilies {
  std::vector<Mask> semiopen;
  std::vector<Mask> semiclosed;
};

}  // namespace detail

struct SoftTopology::Impl {
  Impl(SpaceSignature s, Mask c) : sig(std::move(s)), carrier(c) {}

  SpaceSignature sig;
  Mask carrier;
  std::vector<Mask> opens;
  std::unordered_set<Mask> index;
  std::vector<Mask> neighborhoods;

  mutable std::once_flag semi_once;
  mutable detail::SemiFamilies semi;
};

namespace detail {

struct TopologyAccess {
  static const SoftTopology::Impl& impl(const SoftTopology& t) {
    return *t.impl_;
  }
  /// Builds a topology from a family already known to satisfy the axioms.
  static SoftTopology trusted(const SpaceSignature& sig, Mask carrier,
                              std::vector<Mask> opens);
};

}  // namespace detail
}  // namespace softtopo
