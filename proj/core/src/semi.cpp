#include "softtopo/semi.hpp"

#include "softtopo/bits.hpp"
#include "topology_impl.hpp"

namespace softtopo {

namespace {

void check_cap(const SoftTopology& tau, unsigned cap) {
  const int cells = bits::count(tau.carrier_mask());
  if (static_cast<unsigned>(cells) > cap) {
    throw CapExceeded("semi family enumeration needs " +
                      std::to_string(cells) + " lattice bits; cap is " +
                      std::to_string(cap));
  }
}

std::vector<SoftSet> to_sets(const SpaceSignature& sig,
                             const std::vector<Mask>& masks) {
  std::vector<SoftSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(sig, m);
  return out;
}

}  // namespace

namespace raw {

bool semiopen(const SoftTopology& tau, Mask g) noexcept {
  return bits::subset(g, tau.closure(tau.interior(g))) &&
         bits::subset(g, tau.carrier_mask());
}

bool semiclosed(const SoftTopology& tau, Mask g) noexcept {
  return bits::subset(tau.interior(tau.closure(g)), g) &&
         bits::subset(g, tau.carrier_mask());
}

Mask ssint(const SoftTopology& tau, Mask g) noexcept {
  g &= tau.carrier_mask();
  return g & tau.closure(tau.interior(g));
}

Mask sscl(const SoftTopology& tau, Mask g) noexcept {
  g &= tau.carrier_mask();
  return g | tau.interior(tau.closure(g));
}

namespace {

const detail::SemiFamilies& families(const SoftTopology& tau) {
  const auto& impl = detail::TopologyAccess::impl(tau);
  std::call_once(impl.semi_once, [&] {
    bits::for_each_submask(impl.carrier, [&](Mask g) {
      if (semiopen(tau, g)) impl.semi.semiopen.push_back(g);
    });
    impl.semi.semiclosed.reserve(impl.semi.semiopen.size());
    for (auto it = impl.semi.semiopen.rbegin(); it != impl.semi.semiopen.rend();
         ++it) {
      impl.semi.semiclosed.push_back(impl.carrier & ~*it);
    }
  });
  return impl.semi;
}

}  // namespace

const std::vector<Mask>& soss(const SoftTopology& tau) {
  check_cap(tau, bit_cap());
  return families(tau).semiopen;
}

const std::vector<Mask>& scss(const SoftTopology& tau) {
  check_cap(tau, bit_cap());
  return families(tau).semiclosed;
}

Mask interior_by_definition(const SoftTopology& tau, Mask g) noexcept {
  Mask out = 0;
  for (Mask o : tau.open_masks()) {
    if (bits::subset(o, g)) out |= o;
  }
  return out;
}

Mask closure_by_definition(const SoftTopology& tau, Mask g) noexcept {
  Mask out = tau.carrier_mask();
  for (Mask o : tau.open_masks()) {
    const Mask closed = tau.carrier_mask() & ~o;
    if (bits::subset(g, closed)) out &= closed;
  }
  return out;
}

std::optional<Mask> semiopen_witness_by_definition(const SoftTopology& tau,
                                                   Mask g) {
  if (!bits::subset(g, tau.carrier_mask())) return std::nullopt;
  for (Mask h : tau.open_masks()) {
    if (bits::subset(h, g) && bits::subset(g, closure_by_definition(tau, h))) {
      return h;
    }
  }
  return std::nullopt;
}

std::optional<Mask> semiclosed_witness_by_definition(const SoftTopology& tau,
                                                     Mask g) {
  if (!bits::subset(g, tau.carrier_mask())) return std::nullopt;
  for (Mask o : tau.open_masks()) {
    const Mask k = tau.carrier_mask() & ~o;
    if (bits::subset(g, k) && bits::subset(interior_by_definition(tau, k), g)) {
      return k;
    }
  }
  return std::nullopt;
}

OracleFamilies oracle_families(const SoftTopology& tau, unsigned cap) {
  check_cap(tau, cap);
  const Mask carrier = tau.carrier_mask();
  // Sandwich bounds per open H: H ⊆ G ⊆ cl(H); per closed K: int(K) ⊆ G ⊆ K.
  std::vector<std::pair<Mask, Mask>> open_bounds;
  std::vector<std::pair<Mask, Mask>> closed_bounds;
  for (Mask o : tau.open_masks()) {
    open_bounds.emplace_back(o, closure_by_definition(tau, o));
    const Mask k = carrier & ~o;
    closed_bounds.emplace_back(interior_by_definition(tau, k), k);
  }
  OracleFamilies out;
  out.carrier = carrier;
  bits::for_each_submask(carrier, [&](Mask g) {
    for (auto [lo, hi] : open_bounds) {
      if (bits::subset(lo, g) && bits::subset(g, hi)) {
        out.semiopen.push_back(g);
        break;
      }
    }
    for (auto [lo, hi] : closed_bounds) {
      if (bits::subset(lo, g) && bits::subset(g, hi)) {
        out.semiclosed.push_back(g);
        break;
      }
    }
  });
  return out;
}

Mask ssint_by_definition(const OracleFamilies& f, Mask g) noexcept {
  Mask out = 0;
  for (Mask s : f.semiopen) {
    if (bits::subset(s, g)) out |= s;
  }
  return out;
}

Mask sscl_by_definition(const OracleFamilies& f, Mask g) noexcept {
  Mask out = f.carrier;
  for (Mask s : f.semiclosed) {
    if (bits::subset(g, s)) out &= s;
  }
  return out;
}

}  // namespace raw

Witnessed is_semiopen(const SoftTopology& tau, const SoftSet& g, Mode mode) {
  require_same_signature(tau.signature(), g.signature(), "is_semiopen");
  const auto& sig = tau.signature();
  if (mode == Mode::oracle) {
    auto h = raw::semiopen_witness_by_definition(tau, g.bits());
    if (!h) return {};
    return {true, SoftSet(sig, *h)};
  }
  if (!raw::semiopen(tau, g.bits())) return {};
  return {true, SoftSet(sig, tau.interior(g.bits()))};
}

Witnessed is_semiclosed(const SoftTopology& tau, const SoftSet& g, Mode mode) {
  require_same_signature(tau.signature(), g.signature(), "is_semiclosed");
  const auto& sig = tau.signature();
  if (mode == Mode::oracle) {
    auto k = raw::semiclosed_witness_by_definition(tau, g.bits());
    if (!k) return {};
    return {true, SoftSet(sig, *k)};
  }
  if (!raw::semiclosed(tau, g.bits())) return {};
  return {true, SoftSet(sig, tau.closure(g.bits()))};
}

SemiClassification classify(const SoftTopology& tau, const SoftSet& g) {
  SemiClassification out;
  out.is_open = tau.is_open(g);
  out.is_closed = tau.is_closed(g);
  auto so = is_semiopen(tau, g);
  auto sc = is_semiclosed(tau, g);
  out.is_semiopen = so.holds;
  out.is_semiclosed = sc.holds;
  out.semiopen_witness = std::move(so.witness);
  out.semiclosed_witness = std::move(sc.witness);
  return out;
}

std::vector<SoftSet> enumerate_soss(const SoftTopology& tau, Mode mode,
                                    unsigned cap) {
  check_cap(tau, cap);
  if (mode == Mode::oracle) {
    return to_sets(tau.signature(), raw::oracle_families(tau, cap).semiopen);
  }
  return to_sets(tau.signature(), raw::families(tau).semiopen);
}

std::vector<SoftSet> enumerate_scss(const SoftTopology& tau, Mode mode,
                                    unsigned cap) {
  check_cap(tau, cap);
  if (mode == Mode::oracle) {
    return to_sets(tau.signature(), raw::oracle_families(tau, cap).semiclosed);
  }
  return to_sets(tau.signature(), raw::families(tau).semiclosed);
}

SoftSet ssint(const SoftTopology& tau, const SoftSet& g, Mode mode) {
  require_same_signature(tau.signature(), g.signature(), "ssint");
  if (mode == Mode::oracle) {
    auto f = raw::oracle_families(tau);
    return SoftSet(tau.signature(), raw::ssint_by_definition(f, g.bits()));
  }
  return SoftSet(tau.signature(), raw::ssint(tau, g.bits()));
}

SoftSet sscl(const SoftTopology& tau, const SoftSet& g, Mode mode) {
  require_same_signature(tau.signature(), g.signature(), "sscl");
  if (mode == Mode::oracle) {
    auto f = raw::oracle_families(tau);
    return SoftSet(tau.signature(), raw::sscl_by_definition(f, g.bits()));
  }
  return SoftSet(tau.signature(), raw::sscl(tau, g.bits()));
}

}  // namespace softtopo
