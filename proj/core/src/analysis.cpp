#include "softtopo/analysis.hpp"

#include <sstream>

#include "softtopo/bits.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/semi.hpp"
#include "softtopo/set_cover.hpp"

namespace softtopo {

namespace {

std::vector<Mask> masks_over(const SpaceSignature& sig,
                             std::span<const SoftSet> family) {
  std::vector<Mask> out;
  out.reserve(family.size());
  for (const auto& s : family) {
    require_same_signature(sig, s.signature(), "cover family");
    out.push_back(s.bits());
  }
  return out;
}

Mask random_submask(SplitMix64& rng, Mask carrier) {
  const Mask r = rng.next();
  Mask out = 0;
  std::size_t i = 0;
  bits::for_each_cell(carrier, [&](std::size_t c) {
    if ((r >> (i++ % 64)) & 1U) out |= Mask{1} << c;
  });
  return out;
}

/// True iff some nonempty subfamily has null intersection inside `carrier`.
/// Null intersection of a subfamily is the same as its complements covering
/// the carrier.
bool fip_fails(Mask carrier, std::span<const Mask> family,
               std::vector<std::size_t>* violation = nullptr) {
  if (family.empty()) return false;
  std::vector<Mask> complements;
  complements.reserve(family.size());
  for (Mask m : family) complements.push_back(carrier & ~m);
  auto cover = minimum_cover(carrier, complements);
  if (!cover) return false;
  // A null carrier is covered by the empty subfamily; any single member
  // then already has null intersection.
  if (cover->empty()) cover->push_back(0);
  if (violation) *violation = std::move(*cover);
  return true;
}

}  // namespace

CoverReport analyze_cover(const SoftTopology& tau, const SoftSet& carrier,
                          std::span<const SoftSet> family) {
  require_same_signature(tau.signature(), carrier.signature(), "analyze_cover");
  const std::vector<Mask> masks = masks_over(tau.signature(), family);
  CoverReport out;
  Mask all = 0;
  for (Mask m : masks) all |= m;
  out.is_cover = bits::subset(carrier.bits(), all);
  if (out.is_cover) {
    out.is_semiopen_cover = true;
    for (Mask m : masks) {
      if (!raw::semiopen(tau, m)) {
        out.is_semiopen_cover = false;
        break;
      }
    }
    out.minimal_subcover = minimum_cover(carrier.bits(), masks);
  }
  out.fip_holds =
      !fip_fails(tau.signature().full_mask(), masks, &out.fip_violation);
  return out;
}

SemicompactReport is_semicompact(const SoftTopology& tau, std::uint64_t seed,
                                 std::size_t samples,
                                 std::size_t exhaustive_limit) {
  SemicompactReport out;
  const Mask carrier = tau.carrier_mask();
  const std::vector<Mask>& scss = raw::scss(tau);
  SplitMix64 rng(seed);

  // Semiclosed families: a null intersection turns the complements into a
  // semiopen cover, whose finite subcover is a finite subfamily with null
  // intersection. So FIP must imply a nonnull intersection.
  auto check_semiclosed_family = [&](const std::vector<Mask>& family) {
    ++out.semiclosed_families_checked;
    Mask meet = carrier;
    for (Mask f : family) meet &= f;
    for (Mask f : family) {
      if (!raw::semiopen(tau, carrier & ~f)) {
        out.semiclosed_fip_characterization = false;
      }
    }
    if (!fip_fails(carrier, family) && meet == 0) {
      out.semiclosed_fip_characterization = false;
    }
  };

  out.exhaustive = scss.size() <= exhaustive_limit;
  if (out.exhaustive) {
    const std::size_t total = std::size_t{1} << scss.size();
    for (std::size_t pick = 1; pick < total; ++pick) {
      std::vector<Mask> family;
      for (std::size_t i = 0; i < scss.size(); ++i) {
        if ((pick >> i) & 1U) family.push_back(scss[i]);
      }
      check_semiclosed_family(family);
    }
  } else {
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Mask> family;
      while (family.empty()) {
        for (Mask f : scss) {
          if (rng.next() & 1U) family.push_back(f);
        }
      }
      check_semiclosed_family(family);
    }
  }

  // Arbitrary families with the FIP: the semi-closures still meet.
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t size = 1 + rng.below(4);
    std::vector<Mask> family;
    for (std::size_t i = 0; i < size; ++i) {
      family.push_back(random_submask(rng, carrier));
    }
    ++out.soft_families_checked;
    if (fip_fails(carrier, family)) continue;
    Mask meet = carrier;
    for (Mask g : family) meet &= raw::sscl(tau, g);
    if (meet == 0) out.sscl_fip_characterization = false;
  }

  std::ostringstream note;
  note << "finite space: every semiopen cover is finite, so semicompactness "
          "holds trivially; FIP characterizations checked on "
       << out.semiclosed_families_checked << " semiclosed families ("
       << (out.exhaustive ? "exhaustive" : "sampled") << ") and "
       << out.soft_families_checked << " sampled soft-set families";
  out.note = note.str();
  return out;
}

std::optional<Semiseparation> find_semiseparation(const SoftTopology& tau) {
  const Mask carrier = tau.carrier_mask();
  const auto& sig = tau.signature();
  for (Mask g : raw::soss(tau)) {
    if (g == 0 || g == carrier) continue;
    if (raw::semiopen(tau, carrier & ~g)) {
      return Semiseparation{SoftSet(sig, g), SoftSet(sig, carrier & ~g)};
    }
  }
  return std::nullopt;
}

std::optional<Semiseparation> find_semiseparation_by_pairs(
    const SoftTopology& tau) {
  const Mask carrier = tau.carrier_mask();
  const auto& sig = tau.signature();
  const auto& so = raw::soss(tau);
  for (Mask f : so) {
    if (f == 0) continue;
    for (Mask g : so) {
      if (g == 0 || (f & g) != 0 || (f | g) != carrier) continue;
      return Semiseparation{SoftSet(sig, f), SoftSet(sig, g)};
    }
  }
  return std::nullopt;
}

std::optional<SoftSet> find_semi_clopen(const SoftTopology& tau) {
  const Mask carrier = tau.carrier_mask();
  std::optional<SoftSet> found;
  bits::for_each_submask(carrier, [&](Mask g) {
    if (found || g == 0 || g == carrier) return;
    if (raw::semiopen(tau, g) && raw::semiclosed(tau, g)) {
      found = SoftSet(tau.signature(), g);
    }
  });
  return found;
}

std::optional<std::pair<Mask, Mask>> find_relative_separation(
    Mask part, std::span<const Mask> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Mask k = family[i] & part;
    if (k == 0) continue;
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Mask h = family[j] & part;
      if (h == 0 || (k & h) != 0 || (k | h) != part) continue;
      return std::pair{family[i], family[j]};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string_view axiom_label(Axiom axiom) {
  switch (axiom) {
    case Axiom::semi_T0: return "semi_T0";
    case Axiom::semi_T1: return "semi_T1";
    case Axiom::semi_T2: return "semi_T2";
    case Axiom::semiregular: return "semiregular";
    case Axiom::semi_T3: return "semi_T3";
    case Axiom::seminormal: return "seminormal";
    case Axiom::semi_T4: return "semi_T4";
    case Axiom::semiconnected: return "semiconnected";
    case Axiom::semicompact: return "semicompact";
  }
  return "unknown";
}

Axiom parse_axiom(std::string_view label) {
  for (Axiom a : kAllAxioms) {
    if (axiom_label(a) == label) return a;
  }
  throw InvalidInput("unknown axiom '" + std::string(label) + "'");
}

const AxiomResult& AxiomReport::operator[](Axiom axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return r;
  }
  throw InvalidInput("axiom not present in report");
}

namespace {

/// Precomputed families for one topology. For a semiopen H, the largest
/// semiopen set disjoint from H is ssint(H^c), so a disjoint semiopen
/// partner exists for X iff X ⊆ ssint(H^c).
class AxiomEngine {
 public:
  explicit AxiomEngine(const SoftTopology& tau)
      : tau_(tau),
        carrier_(tau.carrier_mask()),
        so_(raw::soss(tau)),
        sc_(raw::scss(tau)) {
    bits::for_each_cell(carrier_,
                        [&](std::size_t c) { points_.push_back(Mask{1} << c); });
    partner_.reserve(so_.size());
    for (Mask h : so_) partner_.push_back(raw::ssint(tau, carrier_ & ~h));
    hull_.reserve(points_.size());
    for (Mask p : points_) {
      Mask meet = carrier_;
      for (Mask s : so_) {
        if (s & p) meet &= s;
      }
      hull_.push_back(meet);
    }
  }

  AxiomResult run(Axiom axiom, bool all) const {
    AxiomResult r;
    r.axiom = axiom;
    switch (axiom) {
      case Axiom::semi_T0: point_pairs(r, all, true); break;
      case Axiom::semi_T1: point_pairs(r, all, false); break;
      case Axiom::semi_T2: hausdorff(r, all); break;
      case Axiom::semiregular: regular(r, all); break;
      case Axiom::seminormal: normal(r, all); break;
      case Axiom::semi_T3: combine(r, Axiom::semiregular, all); break;
      case Axiom::semi_T4: combine(r, Axiom::seminormal, all); break;
      case Axiom::semiconnected: {
        if (auto sep = find_semiseparation(tau_)) {
          r.holds = false;
          r.violations = 1;
          r.witnesses.push_back({{{"G", sep->first}, {"H", sep->second}}});
        }
        break;
      }
      case Axiom::semicompact: break;
    }
    return r;
  }

 private:
  SoftSet set(Mask m) const { return SoftSet(tau_.signature(), m); }

  // Returns false when scanning should stop.
  bool record(AxiomResult& r, bool all, AxiomWitness w) const {
    r.holds = false;
    ++r.violations;
    if (all || r.witnesses.empty()) r.witnesses.push_back(std::move(w));
    return all;
  }

  void point_pairs(AxiomResult& r, bool all, bool t0) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        // Some semiopen set holds p but not q iff q is outside the meet of
        // all semiopen sets holding p.
        const bool p_not_q = (hull_[i] & points_[j]) == 0;
        const bool q_not_p = (hull_[j] & points_[i]) == 0;
        const bool ok = t0 ? (p_not_q || q_not_p) : (p_not_q && q_not_p);
        if (!ok &&
            !record(r, all, {{{"p", set(points_[i])}, {"q", set(points_[j])}}})) {
          return;
        }
      }
    }
  }

  bool separable(Mask inside, Mask partner_part) const {
    for (std::size_t h = 0; h < so_.size(); ++h) {
      if (bits::subset(inside, so_[h]) && bits::subset(partner_part, partner_[h])) {
        return true;
      }
    }
    return false;
  }

  void hausdorff(AxiomResult& r, bool all) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        if (!separable(points_[i], points_[j]) &&
            !record(r, all, {{{"p", set(points_[i])}, {"q", set(points_[j])}}})) {
          return;
        }
      }
    }
  }

  void regular(AxiomResult& r, bool all) const {
    for (Mask p : points_) {
      for (Mask f : sc_) {
        if (f & p) continue;
        if (!separable(p, f) &&
            !record(r, all, {{{"p", set(p)}, {"F", set(f)}}})) {
          return;
        }
      }
    }
  }

  void normal(AxiomResult& r, bool all) const {
    for (Mask f : sc_) {
      for (Mask k : sc_) {
        if (f & k) continue;
        if (!separable(f, k) &&
            !record(r, all, {{{"F", set(f)}, {"K", set(k)}}})) {
          return;
        }
      }
    }
  }

  void combine(AxiomResult& r, Axiom second, bool all) const {
    AxiomResult t1 = run(Axiom::semi_T1, all);
    if (!t1.holds && !all) {
      r.holds = false;
      r.violations = t1.violations;
      r.witnesses = std::move(t1.witnesses);
      return;
    }
    AxiomResult other = run(second, all);
    r.holds = t1.holds && other.holds;
    r.violations = t1.violations + other.violations;
    r.witnesses = std::move(t1.witnesses);
    for (auto& w : other.witnesses) r.witnesses.push_back(std::move(w));
  }

  const SoftTopology& tau_;
  Mask carrier_;
  const std::vector<Mask>& so_;
  const std::vector<Mask>& sc_;
  std::vector<Mask> points_;
  std::vector<Mask> partner_;
  std::vector<Mask> hull_;
};

}  // namespace

AxiomResult check_axiom(const SoftTopology& tau, Axiom axiom,
                        bool all_witnesses) {
  return AxiomEngine(tau).run(axiom, all_witnesses);
}

AxiomReport check_axioms(const SoftTopology& tau, bool all_witnesses) {
  AxiomEngine engine(tau);
  AxiomReport report;
  for (Axiom a : kAllAxioms) report.results.push_back(engine.run(a, all_witnesses));
  return report;
}

CharacterizationResult seminormal_characterization(const SoftTopology& tau) {
  const auto& so = raw::soss(tau);
  const auto& sc = raw::scss(tau);
  std::vector<Mask> closure_of;
  closure_of.reserve(so.size());
  for (Mask h : so) closure_of.push_back(raw::sscl(tau, h));

  CharacterizationResult out;
  for (Mask f : sc) {
    // Descending G so that G^c ascends, matching the seminormal scan order.
    for (auto g = so.rbegin(); g != so.rend(); ++g) {
      if (!bits::subset(f, *g)) continue;
      bool found = false;
      for (std::size_t h = 0; h < so.size() && !found; ++h) {
        found = bits::subset(f, so[h]) && bits::subset(closure_of[h], *g);
      }
      if (!found) {
        if (out.holds) {
          out.witness.emplace(SoftSet(tau.signature(), f),
                              SoftSet(tau.signature(), *g));
        }
        out.holds = false;
        ++out.violations;
      }
    }
  }
  return out;
}

}  // namespace softtopo
