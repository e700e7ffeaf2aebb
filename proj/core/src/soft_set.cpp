#include "softtopo/soft_set.hpp"

#include "softtopo/bits.hpp"

namespace softtopo {

SoftSet::SoftSet(SpaceSignature signature, Mask bits)
    : signature_(std::move(signature)), bits_(bits) {
  if (!bits::subset(bits_, signature_.full_mask())) {
    throw InvalidInput("soft set has cells outside its signature");
  }
}

SoftSet SoftSet::from_rows(SpaceSignature signature,
                           const std::vector<std::vector<std::size_t>>& rows) {
  if (rows.size() != signature.parameter_count()) {
    throw InvalidInput("expected one row per parameter");
  }
  Mask m = 0;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t x : rows[p]) {
      if (x >= signature.universe_size()) {
        throw InvalidInput("row entry outside the universe");
      }
      m |= Mask{1} << signature.cell(p, x);
    }
  }
  return SoftSet(std::move(signature), m);
}

bool SoftSet::contains(std::size_t parameter,
                       std::size_t element) const noexcept {
  return (bits_ >> signature_.cell(parameter, element)) & 1U;
}

std::vector<std::size_t> SoftSet::row(std::size_t parameter) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < signature_.universe_size(); ++x) {
    if (contains(parameter, x)) out.push_back(x);
  }
  return out;
}

std::size_t SoftSet::cell_count() const noexcept {
  return static_cast<std::size_t>(bits::count(bits_));
}

std::string SoftSet::encoding() const {
  std::string out(signature_.bit_count(), '0');
  for (std::size_t k = 0; k < out.size(); ++k) {
    if ((bits_ >> k) & 1U) out[k] = '1';
  }
  return out;
}

SoftSet to_soft_set(const SpaceSignature& sig, SoftPoint p) {
  if (p.parameter >= sig.parameter_count() || p.element >= sig.universe_size()) {
    throw InvalidInput("soft point outside the signature");
  }
  return SoftSet(sig, Mask{1} << sig.cell(p.parameter, p.element));
}

SoftPoint to_soft_point(const SoftSet& g) {
  if (g.cell_count() != 1) {
    throw InvalidInput("a soft point has exactly one cell");
  }
  const auto cell = static_cast<std::size_t>(std::countr_zero(g.bits()));
  const std::size_t n = g.signature().universe_size();
  return SoftPoint{cell / n, cell % n};
}

std::vector<SoftPoint> all_points(const SpaceSignature& sig) {
  std::vector<SoftPoint> out;
  out.reserve(sig.bit_count());
  for (std::size_t p = 0; p < sig.parameter_count(); ++p) {
    for (std::size_t x = 0; x < sig.universe_size(); ++x) out.push_back({p, x});
  }
  return out;
}

SoftSet make_null(const SpaceSignature& sig) { return SoftSet(sig, 0); }

SoftSet make_absolute(const SpaceSignature& sig) {
  return SoftSet(sig, sig.full_mask());
}

SoftSet soft_union(const SpaceSignature& sig, std::span<const SoftSet> sets) {
  Mask m = 0;
  for (const auto& s : sets) {
    require_same_signature(sig, s.signature(), "union");
    m |= s.bits();
  }
  return SoftSet(sig, m);
}

SoftSet soft_union(const SoftSet& a, const SoftSet& b) {
  require_same_signature(a.signature(), b.signature(), "union");
  return SoftSet(a.signature(), a.bits() | b.bits());
}

SoftSet soft_intersection(std::span<const SoftSet> sets) {
  if (sets.empty()) {
    throw InvalidInput("intersection of an empty family is undefined");
  }
  const SpaceSignature& sig = sets.front().signature();
  Mask m = sig.full_mask();
  for (const auto& s : sets) {
    require_same_signature(sig, s.signature(), "intersection");
    m &= s.bits();
  }
  return SoftSet(sig, m);
}

SoftSet soft_intersection(const SoftSet& a, const SoftSet& b) {
  require_same_signature(a.signature(), b.signature(), "intersection");
  return SoftSet(a.signature(), a.bits() & b.bits());
}

SoftSet complement(const SoftSet& g) {
  return SoftSet(g.signature(), g.signature().full_mask() & ~g.bits());
}

SoftSet difference(const SoftSet& a, const SoftSet& b) {
  require_same_signature(a.signature(), b.signature(), "difference");
  return SoftSet(a.signature(), a.bits() & ~b.bits());
}

bool is_subset(const SoftSet& g, const SoftSet& k) {
  require_same_signature(g.signature(), k.signature(), "is_subset");
  return bits::subset(g.bits(), k.bits());
}

bool is_disjoint(const SoftSet& g, const SoftSet& k) {
  require_same_signature(g.signature(), k.signature(), "is_disjoint");
  return (g.bits() & k.bits()) == 0;
}

bool point_in(SoftPoint p, const SoftSet& g, MembershipMode mode) {
  const SpaceSignature& sig = g.signature();
  if (p.parameter >= sig.parameter_count() || p.element >= sig.universe_size()) {
    throw InvalidInput("soft point outside the signature");
  }
  const Mask cell = Mask{1} << sig.cell(p.parameter, p.element);
  if (mode == MembershipMode::contains) return (g.bits() & cell) != 0;
  return (g.bits() & sig.row_mask(p.parameter)) == cell;
}

}  // namespace softtopo
