#pragma once

#include <compare>
#include <cstddef>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "softtopo/error.hpp"
#include "softtopo/signature.hpp"

namespace softtopo {

/// A soft set F_A: one subset of the universe per parameter. Immutable value.
class SoftSet {
 public:
  /// Throws InvalidInput if `bits` has cells outside the signature.
  SoftSet(SpaceSignature signature, Mask bits);

  /// rows[p] lists universe indices present at parameter p.
  static SoftSet from_rows(SpaceSignature signature,
                           const std::vector<std::vector<std::size_t>>& rows);

  const SpaceSignature& signature() const noexcept { return signature_; }
  Mask bits() const noexcept { return bits_; }

  bool contains(std::size_t parameter, std::size_t element) const noexcept;
  std::vector<std::size_t> row(std::size_t parameter) const;
  bool is_null() const noexcept { return bits_ == 0; }
  bool is_absolute() const noexcept { return bits_ == signature_.full_mask(); }
  std::size_t cell_count() const noexcept;

  /// Row-major bit string, parameters then universe elements in declared
  /// order. Equal sets have equal encodings and vice versa.
  std::string encoding() const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.bits_ == b.bits_ && a.signature_ == b.signature_;
  }
  /// Canonical order: numeric value of the mask (cell k weighs 2^k).
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  SpaceSignature signature_;
  Mask bits_;
};

/// A soft point e_F: the element `element` at parameter `parameter`, empty
/// everywhere else.
struct SoftPoint {
  std::size_t parameter = 0;
  std::size_t element = 0;

  friend bool operator==(const SoftPoint&, const SoftPoint&) = default;
  friend auto operator<=>(const SoftPoint&, const SoftPoint&) = default;
};

SoftSet to_soft_set(const SpaceSignature& sig, SoftPoint p);
/// Throws InvalidInput unless G has exactly one nonempty row and that row
/// is a singleton.
SoftPoint to_soft_point(const SoftSet& g);
/// All soft points of the signature in cell order.
std::vector<SoftPoint> all_points(const SpaceSignature& sig);

SoftSet make_null(const SpaceSignature& sig);
SoftSet make_absolute(const SpaceSignature& sig);

/// Parameter-wise union; the empty family yields the null soft set.
SoftSet soft_union(const SpaceSignature& sig, std::span<const SoftSet> sets);
SoftSet soft_union(const SoftSet& a, const SoftSet& b);
/// Parameter-wise intersection. Throws InvalidInput on an empty family.
SoftSet soft_intersection(std::span<const SoftSet> sets);
SoftSet soft_intersection(const SoftSet& a, const SoftSet& b);
/// Relative complement: G^c(e) = U - G(e).
SoftSet complement(const SoftSet& g);
SoftSet difference(const SoftSet& a, const SoftSet& b);

bool is_subset(const SoftSet& g, const SoftSet& k);
bool is_disjoint(const SoftSet& g, const SoftSet& k);

enum class MembershipMode {
  /// p in G iff {x} is contained in G(e).
  contains,
  /// p in G iff G(e) equals {x}.
  equals,
};

bool point_in(SoftPoint p, const SoftSet& g,
              MembershipMode mode = MembershipMode::contains);

/// All 2^(n*m) soft sets over `sig`, null first and absolute last.
/// Throws CapExceeded when the lattice has more than `cap` bits.
inline auto enumerate_soft_sets(const SpaceSignature& sig,
                                unsigned cap = bit_cap()) {
  if (sig.bit_count() > cap) {
    throw CapExceeded("enumeration needs " + std::to_string(sig.bit_count()) +
                      " lattice bits; cap is " + std::to_string(cap));
  }
  const Mask count = Mask{1} << sig.bit_count();
  return std::views::iota(Mask{0}, count) |
         std::views::transform([sig](Mask m) { return SoftSet(sig, m); });
}

}  // namespace softtopo
