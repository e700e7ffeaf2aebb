#include "claim_context.hpp"

#include <algorithm>

#include "softtopo/bits.hpp"
#include "softtopo/corpus.hpp"

namespace softtopo::detail {

namespace {

constexpr int kAllSetsCells = 8;
constexpr int kAllPairsCells = 4;
constexpr std::size_t kSampledSets = 192;
constexpr std::size_t kSampledCarriers = 16;
constexpr std::size_t kSampledMaps = 12;
constexpr std::uint64_t kMaxEnumeratedMaps = 64;

void sort_unique(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Mask> all_subsets(Mask carrier) {
  std::vector<Mask> out;
  bits::for_each_submask(carrier, [&](Mask m) { out.push_back(m); });
  return out;
}

// base^exp, saturating above kMaxEnumeratedMaps.
std::uint64_t bounded_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > kMaxEnumeratedMaps) return kMaxEnumeratedMaps + 1;
  }
  return out;
}

std::vector<std::size_t> digits(std::uint64_t value, std::uint64_t base,
                                std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<std::size_t>(value % base);
    value /= base;
  }
  return out;
}

std::vector<std::size_t> random_map(SplitMix64& rng, std::size_t from,
                                    std::size_t to) {
  std::vector<std::size_t> out(from);
  for (auto& v : out) v = static_cast<std::size_t>(rng.below(to));
  return out;
}

std::string describe(const SoftFunction& f) {
  std::string out;
  for (auto v : f.point_map()) out += std::to_string(v) + ",";
  out += "|";
  for (auto v : f.param_map()) out += std::to_string(v) + ",";
  return out;
}

}  // namespace

Instance::Instance(SoftTopology tau, std::string name, const Pinned* pinned)
    : tau_(std::move(tau)),
      name_(std::move(name)),
      pinned_(pinned),
      carrier_(tau_.carrier_mask()),
      key_(digest64(tau_.encoding())) {}

SplitMix64 Instance::rng(std::string_view claim, std::uint64_t salt) const {
  return SplitMix64(key_ ^ digest64(claim) ^ SplitMix64::mix(salt));
}

Mask Instance::random_subset(SplitMix64& rng, Mask m) {
  const Mask r = rng.next();
  Mask out = 0;
  std::size_t i = 0;
  bits::for_each_cell(m, [&](std::size_t c) {
    if ((r >> i++) & 1U) out |= Mask{1} << c;
  });
  return out;
}

const std::vector<Mask>& Instance::sets() {
  if (sets_) return *sets_;
  if (bits::count(carrier_) <= kAllSetsCells) {
    sets_ = all_subsets(carrier_);
    return *sets_;
  }
  std::vector<Mask> out = {0, carrier_};
  for (Mask o : tau_.open_masks()) {
    out.push_back(o);
    out.push_back(comp(o));
  }
  const auto& s = so();
  for (std::size_t i = 0; i < s.size() && i < 64; ++i) out.push_back(s[i]);
  auto r = rng("sets");
  for (std::size_t i = 0; i < kSampledSets; ++i) out.push_back(random_subset(r, carrier_));
  sort_unique(out);
  sets_ = std::move(out);
  return *sets_;
}

const std::vector<std::pair<Mask, Mask>>& Instance::pairs() {
  if (pairs_) return *pairs_;
  std::vector<std::pair<Mask, Mask>> out;
  if (bits::count(carrier_) <= kAllPairsCells) {
    for (Mask a : sets()) {
      for (Mask b : sets()) out.emplace_back(a, b);
    }
  } else {
    auto r = rng("pairs");
    for (int i = 0; i < 128; ++i) {
      out.emplace_back(random_subset(r, carrier_), random_subset(r, carrier_));
    }
    for (int i = 0; i < 128; ++i) {
      const Mask a = random_subset(r, carrier_);
      out.emplace_back(a, a | random_subset(r, carrier_));
    }
    for (const auto* family : {&so(), &sc()}) {
      for (int i = 0; i < 64; ++i) {
        out.emplace_back((*family)[r.below(family->size())],
                         (*family)[r.below(family->size())]);
      }
    }
  }
  pairs_ = std::move(out);
  return *pairs_;
}

const std::vector<Mask>& Instance::carriers() {
  if (carriers_) return *carriers_;
  if (pinned_ && pinned_->carrier) {
    carriers_ = std::vector<Mask>{*pinned_->carrier};
  } else if (bits::count(carrier_) <= kAllPairsCells) {
    carriers_ = all_subsets(carrier_);
  } else {
    std::vector<Mask> out = {carrier_};
    auto r = rng("carriers");
    while (out.size() < kSampledCarriers) out.push_back(random_subset(r, carrier_));
    sort_unique(out);
    carriers_ = std::move(out);
  }
  return *carriers_;
}

TargetSpace& Instance::target(std::size_t index) { return targets_.at(index); }

const std::vector<MapCase>& Instance::maps() {
  if (!maps_) build_maps();
  return *maps_;
}

void Instance::build_maps() {
  maps_.emplace();
  auto add_target = [&](SoftTopology t) {
    TargetSpace ts{std::move(t), {}, std::nullopt};
    const Mask c = ts.topology.carrier_mask();
    if (bits::count(c) <= kAllSetsCells) {
      ts.sets = all_subsets(c);
    } else {
      auto r = rng("target-sets", digest64(ts.topology.encoding()));
      ts.sets = {0, c};
      for (int i = 0; i < 64; ++i) ts.sets.push_back(random_subset(r, c));
      sort_unique(ts.sets);
    }
    targets_.push_back(std::move(ts));
    return targets_.size() - 1;
  };
  auto add_map = [&](std::size_t t, SoftFunction f) {
    const auto& target = targets_[t].topology;
    MapClassification classes = classify_map(f, tau_, target);
    const std::uint64_t salt = digest64(target.encoding() + "|" + describe(f));
    maps_->push_back(MapCase{t, std::move(f), std::move(classes), salt});
  };

  if (pinned_ && pinned_->map) {
    const std::size_t t = add_target(pinned_->map->first);
    add_map(t, pinned_->map->second);
    return;
  }
  if (!tau_.is_full_space()) return;

  const auto& s = sig();
  auto r = rng("maps");
  std::vector<std::size_t> targets = {add_target(tau_)};
  {
    const std::size_t nt = 1 + r.below(3);
    const std::size_t mt = nt == 3 ? 1 : 1 + r.below(2);
    const double density = std::array{0.15, 0.3, 0.5}[r.below(3)];
    targets.push_back(add_target(
        random_topology(SpaceSignature::numbered(nt, mt), r.next(), density)));
  }
  if (s.bit_count() <= bit_cap()) {
    const double density = r.below(2) == 0 ? 0.1 : 0.2;
    targets.push_back(add_target(random_topology(s, r.next(), density)));
  }

  for (std::size_t t : targets) {
    const auto& ts = targets_[t].topology.signature();
    const std::uint64_t points = bounded_power(ts.universe_size(), s.universe_size());
    const std::uint64_t params =
        bounded_power(ts.parameter_count(), s.parameter_count());
    if (points * params <= kMaxEnumeratedMaps) {
      for (std::uint64_t k = 0; k < points * params; ++k) {
        add_map(t, SoftFunction(s, ts,
                                digits(k % points, ts.universe_size(), s.universe_size()),
                                digits(k / points, ts.parameter_count(),
                                       s.parameter_count())));
      }
      continue;
    }
    if (ts == s) add_map(t, SoftFunction::identity(s));
    for (std::size_t i = 0; i < kSampledMaps; ++i) {
      auto pm = random_map(r, s.universe_size(), ts.universe_size());
      auto am = random_map(r, s.parameter_count(), ts.parameter_count());
      add_map(t, SoftFunction(s, ts, std::move(pm), std::move(am)));
    }
  }
}

const AxiomReport& Instance::axioms() {
  if (!axioms_) axioms_ = check_axioms(tau_);
  return *axioms_;
}

const SemicompactReport& Instance::semicompact() {
  if (!semicompact_) semicompact_ = is_semicompact(tau_, key_);
  return *semicompact_;
}

const raw::OracleFamilies* Instance::oracle() {
  if (!oracle_) {
    try {
      oracle_.emplace(raw::oracle_families(tau_));
    } catch (const CapExceeded&) {
      oracle_.emplace(std::nullopt);
    }
  }
  return oracle_->has_value() ? &**oracle_ : nullptr;
}

bool Instance::semiconnected() {
  if (!semiconnected_) semiconnected_ = !find_semiseparation(tau_).has_value();
  return *semiconnected_;
}

void Probe::fail(Parts parts, std::string_view note) {
  ClaimWitness w{inst_.tau(), inst_.name(), std::move(parts), std::nullopt,
                 std::nullopt, std::nullopt, std::string(note)};
  if (carrier_) w.carrier = inst_.set(*carrier_);
  if (map_) {
    w.target = inst_.target(map_->target).topology;
    w.function = map_->function;
  }
  witness_ = std::move(w);
}

}  // namespace softtopo::detail
