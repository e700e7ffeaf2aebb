#include "softtopo/topology.hpp"

#include <algorithm>
#include <sstream>

#include "softtopo/bits.hpp"
#include "topology_impl.hpp"

namespace softtopo {

std::string_view axiom_name(TopologyViolation::Axiom axiom) {
  switch (axiom) {
    case TopologyViolation::Axiom::outside_carrier: return "outside-carrier";
    case TopologyViolation::Axiom::missing_null: return "missing-null";
    case TopologyViolation::Axiom::missing_absolute: return "missing-absolute";
    case TopologyViolation::Axiom::union_closure: return "union-closure";
    case TopologyViolation::Axiom::intersection_closure:
      return "intersection-closure";
  }
  return "unknown";
}

std::string TopologyViolation::describe() const {
  std::ostringstream out;
  out << "axiom=" << axiom_name(axiom);
  for (const auto& w : witnesses) out << " witness=" << w.encoding();
  return out.str();
}

InvalidTopology::InvalidTopology(TopologyViolation violation)
    : InvalidInput("invalid topology: " + violation.describe()),
      violation_(std::move(violation)) {}

namespace {

std::vector<Mask> neighborhoods_of(const SpaceSignature& sig, Mask carrier,
                                   const std::vector<Mask>& opens) {
  std::vector<Mask> out(sig.bit_count(), 0);
  bits::for_each_cell(carrier, [&](std::size_t cell) {
    Mask n = carrier;
    const Mask bit = Mask{1} << cell;
    for (Mask o : opens) {
      if (o & bit) n &= o;
    }
    out[cell] = n;
  });
  return out;
}

std::variant<SoftTopology, TopologyViolation> validate_masks(
    const SpaceSignature& sig, Mask carrier, std::vector<Mask> opens) {
  using Axiom = TopologyViolation::Axiom;
  auto set = [&](Mask m) { return SoftSet(sig, m); };

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  for (Mask o : opens) {
    if (!bits::subset(o, carrier)) {
      return TopologyViolation{Axiom::outside_carrier, {set(o)}};
    }
  }
  std::unordered_set<Mask> index(opens.begin(), opens.end());
  if (!index.contains(0)) return TopologyViolation{Axiom::missing_null, {}};
  if (!index.contains(carrier)) {
    return TopologyViolation{Axiom::missing_absolute, {set(carrier)}};
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!index.contains(opens[i] | opens[j])) {
        return TopologyViolation{Axiom::union_closure,
                                 {set(opens[i]), set(opens[j])}};
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!index.contains(opens[i] & opens[j])) {
        return TopologyViolation{Axiom::intersection_closure,
                                 {set(opens[i]), set(opens[j])}};
      }
    }
  }
  return detail::TopologyAccess::trusted(sig, carrier, std::move(opens));
}

std::vector<Mask> masks_of(const SpaceSignature& sig,
                           std::span<const SoftSet> sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    require_same_signature(sig, s.signature(), "topology");
    out.push_back(s.bits());
  }
  return out;
}

}  // namespace

SoftTopology detail::TopologyAccess::trusted(const SpaceSignature& sig,
                                             Mask carrier,
                                             std::vector<Mask> opens) {
  auto impl = std::make_shared<SoftTopology::Impl>(sig, carrier);
  impl->index.insert(opens.begin(), opens.end());
  impl->neighborhoods = neighborhoods_of(sig, carrier, opens);
  impl->opens = std::move(opens);
  return SoftTopology(std::shared_ptr<const SoftTopology::Impl>(std::move(impl)));
}

SoftTopology::SoftTopology(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

SoftTopology::SoftTopology(const SpaceSignature& sig,
                           std::span<const SoftSet> opens) {
  auto result = validate_masks(sig, sig.full_mask(), masks_of(sig, opens));
  if (auto* v = std::get_if<TopologyViolation>(&result)) {
    throw InvalidTopology(std::move(*v));
  }
  impl_ = std::get<SoftTopology>(result).impl_;
}

const SpaceSignature& SoftTopology::signature() const noexcept {
  return impl_->sig;
}
Mask SoftTopology::carrier_mask() const noexcept { return impl_->carrier; }
SoftSet SoftTopology::carrier() const { return SoftSet(impl_->sig, impl_->carrier); }
std::span<const Mask> SoftTopology::open_masks() const noexcept {
  return impl_->opens;
}
std::size_t SoftTopology::size() const noexcept { return impl_->opens.size(); }

std::vector<SoftSet> SoftTopology::opens() const {
  std::vector<SoftSet> out;
  out.reserve(impl_->opens.size());
  for (Mask m : impl_->opens) out.emplace_back(impl_->sig, m);
  return out;
}

bool SoftTopology::is_open(Mask m) const { return impl_->index.contains(m); }

bool SoftTopology::is_closed(Mask m) const {
  return bits::subset(m, impl_->carrier) && is_open(complement(m));
}

bool SoftTopology::is_open(const SoftSet& g) const {
  require_same_signature(impl_->sig, g.signature(), "is_open");
  return is_open(g.bits());
}

bool SoftTopology::is_closed(const SoftSet& g) const {
  require_same_signature(impl_->sig, g.signature(), "is_closed");
  return is_closed(g.bits());
}

bool SoftTopology::is_full_space() const noexcept {
  return impl_->carrier == impl_->sig.full_mask();
}

bool SoftTopology::is_discrete() const noexcept {
  const int cells = bits::count(impl_->carrier);
  return cells < 64 && impl_->opens.size() == (std::size_t{1} << cells);
}

bool SoftTopology::is_indiscrete() const noexcept {
  return impl_->opens.size() <= 2;
}

std::span<const Mask> SoftTopology::neighborhoods() const noexcept {
  return impl_->neighborhoods;
}

Mask SoftTopology::complement(Mask m) const noexcept {
  return impl_->carrier & ~m;
}

Mask SoftTopology::interior(Mask m) const noexcept {
  m &= impl_->carrier;
  Mask out = 0;
  bits::for_each_cell(m, [&](std::size_t cell) {
    const Mask n = impl_->neighborhoods[cell];
    if (bits::subset(n, m)) out |= n;
  });
  return out;
}

Mask SoftTopology::closure(Mask m) const noexcept {
  return complement(interior(complement(m)));
}

std::string SoftTopology::encoding() const {
  std::ostringstream out;
  const auto& sig = impl_->sig;
  out << "U=";
  for (std::size_t i = 0; i < sig.universe().size(); ++i) {
    out << (i ? "," : "") << sig.universe()[i];
  }
  out << ";A=";
  for (std::size_t i = 0; i < sig.parameters().size(); ++i) {
    out << (i ? "," : "") << sig.parameters()[i];
  }
  out << ";C=" << carrier().encoding() << ";O=";
  for (std::size_t i = 0; i < impl_->opens.size(); ++i) {
    out << (i ? "," : "") << SoftSet(sig, impl_->opens[i]).encoding();
  }
  return out.str();
}

bool operator==(const SoftTopology& a, const SoftTopology& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->carrier == b.impl_->carrier &&
         a.impl_->opens == b.impl_->opens && a.impl_->sig == b.impl_->sig;
}

std::variant<SoftTopology, TopologyViolation> validate_topology(
    const SpaceSignature& sig, std::span<const SoftSet> candidate) {
  return validate_masks(sig, sig.full_mask(), masks_of(sig, candidate));
}

std::variant<SoftTopology, TopologyViolation> validate_topology(
    const SoftSet& carrier, std::span<const SoftSet> candidate) {
  return validate_masks(carrier.signature(), carrier.bits(),
                        masks_of(carrier.signature(), candidate));
}

SoftSet interior(const SoftTopology& tau, const SoftSet& g) {
  require_same_signature(tau.signature(), g.signature(), "interior");
  return SoftSet(tau.signature(), tau.interior(g.bits()));
}

SoftSet closure(const SoftTopology& tau, const SoftSet& g) {
  require_same_signature(tau.signature(), g.signature(), "closure");
  return SoftSet(tau.signature(), tau.closure(g.bits()));
}

SoftTopology subspace(const SoftTopology& tau, const SoftSet& carrier) {
  require_same_signature(tau.signature(), carrier.signature(), "subspace");
  const Mask c = carrier.bits() & tau.carrier_mask();
  std::vector<Mask> opens;
  opens.reserve(tau.size());
  for (Mask o : tau.open_masks()) opens.push_back(o & c);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return detail::TopologyAccess::trusted(tau.signature(), c, std::move(opens));
}

bool is_basis(const SoftTopology& tau, std::span<const SoftSet> basis) {
  std::vector<Mask> members;
  for (const auto& b : basis) {
    if (!tau.is_open(b)) {
      throw InvalidInput("basis member " + b.encoding() + " is not open");
    }
    members.push_back(b.bits());
  }
  for (Mask o : tau.open_masks()) {
    Mask covered = 0;
    for (Mask b : members) {
      if (bits::subset(b, o)) covered |= b;
    }
    if (covered != o) return false;
  }
  return true;
}

SoftTopology from_subbasis(const SpaceSignature& sig,
                           std::span<const SoftSet> seeds, unsigned cap) {
  const Mask full = sig.full_mask();
  std::vector<Mask> seed_masks = masks_of(sig, seeds);

  // Every open set is the union of the minimal neighbourhoods of its cells,
  // and the minimal neighbourhood of a cell is the intersection of the seeds
  // containing it.
  std::vector<Mask> nbhd;
  bits::for_each_cell(full, [&](std::size_t cell) {
    Mask n = full;
    for (Mask s : seed_masks) {
      if ((s >> cell) & 1U) n &= s;
    }
    nbhd.push_back(n);
  });
  std::sort(nbhd.begin(), nbhd.end());
  nbhd.erase(std::unique(nbhd.begin(), nbhd.end()), nbhd.end());

  const std::size_t limit =
      cap >= 63 ? ~std::size_t{0} : (std::size_t{1} << cap);
  std::vector<Mask> opens{0};
  std::unordered_set<Mask> seen{0};
  for (Mask n : nbhd) {
    const std::size_t existing = opens.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const Mask u = opens[i] | n;
      if (seen.insert(u).second) {
        opens.push_back(u);
        if (opens.size() > limit) {
          throw CapExceeded("generated topology exceeds 2^" +
                            std::to_string(cap) + " open sets");
        }
      }
    }
  }
  std::sort(opens.begin(), opens.end());
  return detail::TopologyAccess::trusted(sig, full, std::move(opens));
}

SoftTopology indiscrete_topology(const SpaceSignature& sig) {
  return detail::TopologyAccess::trusted(sig, sig.full_mask(),
                                         {0, sig.full_mask()});
}

SoftTopology discrete_topology(const SpaceSignature& sig, unsigned cap) {
  if (sig.bit_count() > cap) {
    throw CapExceeded("discrete topology needs 2^" +
                      std::to_string(sig.bit_count()) + " open sets");
  }
  std::vector<Mask> opens;
  bits::for_each_submask(sig.full_mask(), [&](Mask m) { opens.push_back(m); });
  return detail::TopologyAccess::trusted(sig, sig.full_mask(), std::move(opens));
}

}  // namespace softtopo
