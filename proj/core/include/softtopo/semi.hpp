#pragma once

#include <optional>
#include <vector>

#include "softtopo/topology.hpp"

namespace softtopo {

/// How a semi- operator is evaluated. `fast` uses the closed forms
/// G ⊆ cl(int G), int(cl G) ⊆ G, G ∩ cl(int G) and G ∪ int(cl G); `oracle`
/// searches witnesses and families straight from the definitions.
enum class Mode { fast, oracle };

struct Witnessed {
  bool holds = false;
  std::optional<SoftSet> witness;
};

struct SemiClassification {
  bool is_open = false;
  bool is_closed = false;
  bool is_semiopen = false;
  bool is_semiclosed = false;
  /// Open H with H ⊆ G ⊆ cl(H).
  std::optional<SoftSet> semiopen_witness;
  /// Closed K with int(K) ⊆ G ⊆ K.
  std::optional<SoftSet> semiclosed_witness;
};

Witnessed is_semiopen(const SoftTopology& tau, const SoftSet& g,
                      Mode mode = Mode::fast);
Witnessed is_semiclosed(const SoftTopology& tau, const SoftSet& g,
                        Mode mode = Mode::fast);
SemiClassification classify(const SoftTopology& tau, const SoftSet& g);

/// SOSS / SCSS in canonical order. Throws CapExceeded when the carrier has
/// more than `cap` cells.
std::vector<SoftSet> enumerate_soss(const SoftTopology& tau,
                                    Mode mode = Mode::fast,
                                    unsigned cap = bit_cap());
std::vector<SoftSet> enumerate_scss(const SoftTopology& tau,
                                    Mode mode = Mode::fast,
                                    unsigned cap = bit_cap());

/// Largest semiopen subset of G.
SoftSet ssint(const SoftTopology& tau, const SoftSet& g, Mode mode = Mode::fast);
/// Smallest semiclosed superset of G.
SoftSet sscl(const SoftTopology& tau, const SoftSet& g, Mode mode = Mode::fast);

/// Mask-level entry points for the analysis and explorer hot loops.
namespace raw {

bool semiopen(const SoftTopology& tau, Mask g) noexcept;
bool semiclosed(const SoftTopology& tau, Mask g) noexcept;
Mask ssint(const SoftTopology& tau, Mask g) noexcept;
Mask sscl(const SoftTopology& tau, Mask g) noexcept;

/// Cached fast-path families (computed once per topology, thread-safe).
const std::vector<Mask>& soss(const SoftTopology& tau);
const std::vector<Mask>& scss(const SoftTopology& tau);

// Definitional evaluation, independent of the neighbourhood-based
// interior/closure used by the fast paths.
Mask interior_by_definition(const SoftTopology& tau, Mask g) noexcept;
Mask closure_by_definition(const SoftTopology& tau, Mask g) noexcept;
std::optional<Mask> semiopen_witness_by_definition(const SoftTopology& tau,
                                                   Mask g);
std::optional<Mask> semiclosed_witness_by_definition(const SoftTopology& tau,
                                                     Mask g);

struct OracleFamilies {
  Mask carrier = 0;
  std::vector<Mask> semiopen;
  std::vector<Mask> semiclosed;
};
OracleFamilies oracle_families(const SoftTopology& tau,
                               unsigned cap = bit_cap());
/// Union of SOSS members inside g.
Mask ssint_by_definition(const OracleFamilies& f, Mask g) noexcept;
/// Intersection of SCSS members containing g.
Mask sscl_by_definition(const OracleFamilies& f, Mask g) noexcept;

}  // namespace raw
}  // namespace softtopo
