#pragma once

#include <optional>
#include <vector>

#include "softtopo/topology.hpp"

namespace softtopo {

/// A soft function U_A -> U_B given by a total map on universe elements and
/// a total map on parameters. Images and preimages are induced cellwise:
///   f(F)(b)    = union of point_map(F(a)) over a with param_map(a) = b
///   f^-1(G)(a) = point_map^-1(G(param_map(a)))
class SoftFunction {
 public:
  /// Throws InvalidInput if a map has the wrong length or an index out of
  /// range.
  SoftFunction(SpaceSignature source, SpaceSignature target,
               std::vector<std::size_t> point_map,
               std::vector<std::size_t> param_map);

  static SoftFunction identity(const SpaceSignature& sig);

  const SpaceSignature& source() const noexcept { return source_; }
  const SpaceSignature& target() const noexcept { return target_; }
  const std::vector<std::size_t>& point_map() const noexcept {
    return point_map_;
  }
  const std::vector<std::size_t>& param_map() const noexcept {
    return param_map_;
  }

  /// Both component maps onto; equivalently f(U_A) = U_B.
  bool is_surjective() const;

  Mask image(Mask source_set) const noexcept;
  Mask preimage(Mask target_set) const noexcept;

  friend bool operator==(const SoftFunction&, const SoftFunction&) = default;

 private:
  SpaceSignature source_;
  SpaceSignature target_;
  std::vector<std::size_t> point_map_;
  std::vector<std::size_t> param_map_;
  // Target cell of each source cell.
  std::vector<std::size_t> cell_map_;
};

SoftSet image(const SoftFunction& f, const SoftSet& g);
SoftSet preimage(const SoftFunction& f, const SoftSet& g);

struct MapProperty {
  bool holds = true;
  /// For a failed property: the set whose image/preimage misbehaves.
  std::optional<SoftSet> counterwitness;
};

struct MapClassification {
  /// Preimage of every open set is open.
  MapProperty continuous;
  /// Preimage of every open set is semiopen.
  MapProperty semicontinuous;
  /// Preimage of every semiopen set is semiopen.
  MapProperty irresolute;
  /// Image of every open set is semiopen.
  MapProperty semiopen_map;
  /// Image of every closed set is semiclosed.
  MapProperty semiclosed_map;
};

/// Exhaustive classification; irresoluteness enumerates SOSS of the target.
MapClassification classify_map(const SoftFunction& f,
                               const SoftTopology& source,
                               const SoftTopology& target);

}  // namespace softtopo
