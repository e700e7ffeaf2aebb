#include <algorithm>
#include <array>
#include <tuple>
#include <set>

#include "claim_context.hpp"
#include "softtopo/bits.hpp"
#include "softtopo/set_cover.hpp"

namespace softtopo::detail {

namespace {

using Named = std::pair<const char*, Mask>;

Parts parts(const Instance& I, std::initializer_list<Named> items) {
  Parts out;
  for (const auto& [name, m] : items) out.emplace_back(name, I.set(m));
  return out;
}

Parts target_parts(const SoftTopology& t, std::initializer_list<Named> items) {
  Parts out;
  for (const auto& [name, m] : items) {
    out.emplace_back(name, SoftSet(t.signature(), m));
  }
  return out;
}

Parts axiom_parts(const AxiomResult& r) {
  return r.witnesses.empty() ? Parts{} : r.witnesses.front().parts;
}

bool subset(Mask a, Mask b) { return bits::subset(a, b); }

// Rows of m as universe bitmaps, for the simplest-witness order.
std::size_t distinct_rows(const SpaceSignature& sig, Mask m) {
  std::set<Mask> rows;
  for (std::size_t p = 0; p < sig.parameter_count(); ++p) {
    rows.insert((m & sig.row_mask(p)) >> sig.cell(p, 0));
  }
  return rows.size();
}

// Fewest distinct rows, then fewest cells, then canonical order.
std::vector<Mask> simplest_first(const SpaceSignature& sig, std::vector<Mask> v) {
  std::stable_sort(v.begin(), v.end(), [&](Mask a, Mask b) {
    const auto ka = std::tuple(distinct_rows(sig, a), bits::count(a), a);
    const auto kb = std::tuple(distinct_rows(sig, b), bits::count(b), b);
    return ka < kb;
  });
  return v;
}

std::vector<Mask> points_of(Mask m) {
  std::vector<Mask> out;
  bits::for_each_cell(m, [&](std::size_t c) { out.push_back(Mask{1} << c); });
  return out;
}

// Submasks of `free` added to `base`: all of them up to 8 free cells,
// otherwise a sample of 64.
template <typename Fn>
bool for_interval(Mask base, Mask free, SplitMix64& rng, Fn&& fn) {
  if (bits::count(free) <= 8) {
    bool go = true;
    bits::for_each_submask(free, [&](Mask sub) {
      if (go) go = fn(base | sub);
    });
    return go;
  }
  for (int i = 0; i < 64; ++i) {
    if (!fn(base | Instance::random_subset(rng, free))) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Soft-set algebra

void core_lattice(Instance& I, Probe& p) {
  const auto& sets = I.sets();
  std::size_t i = 0;
  for (auto [ga, ka] : I.pairs()) {
    const SoftSet a = I.set(ga), b = I.set(ka);
    const SoftSet c = I.set(sets[(i++ * 7 + 3) % sets.size()]);
    const bool ok =
        soft_union(a, soft_union(b, c)) == soft_union(soft_union(a, b), c) &&
        soft_intersection(a, soft_intersection(b, c)) ==
            soft_intersection(soft_intersection(a, b), c) &&
        soft_union(a, b) == soft_union(b, a) &&
        soft_intersection(a, b) == soft_intersection(b, a) &&
        soft_union(a, soft_intersection(a, b)) == a &&
        soft_intersection(a, soft_union(a, b)) == a &&
        soft_intersection(a, soft_union(b, c)) ==
            soft_union(soft_intersection(a, b), soft_intersection(a, c)) &&
        soft_union(a, soft_intersection(b, c)) ==
            soft_intersection(soft_union(a, b), soft_union(a, c)) &&
        soft_union(make_null(I.sig()), a) == a &&
        soft_intersection(make_absolute(I.sig()), a) == a;
    if (!p.expect(ok, [&] { return Parts{{"G", a}, {"K", b}, {"L", c}}; })) return;
  }
}

void core_demorgan(Instance& I, Probe& p) {
  auto r = I.rng("I.core.demorgan");
  const auto& sets = I.sets();
  for (int f = 0; f < 64; ++f) {
    std::vector<SoftSet> family, complements;
    const std::size_t size = 1 + r.below(4);
    for (std::size_t i = 0; i < size; ++i) {
      family.push_back(I.set(sets[r.below(sets.size())]));
      complements.push_back(complement(family.back()));
    }
    const bool ok =
        complement(soft_union(I.sig(), family)) == soft_intersection(complements) &&
        complement(soft_intersection(family)) == soft_union(I.sig(), complements) &&
        complement(complement(family.front())) == family.front() &&
        soft_intersection(family.front(), complement(family.front())).is_null() &&
        is_disjoint(family.front(), complement(family.front()));
    if (!p.expect(ok, [&] {
          Parts out;
          for (std::size_t i = 0; i < family.size(); ++i) {
            out.emplace_back("G" + std::to_string(i + 1), family[i]);
          }
          return out;
        })) {
      return;
    }
  }
}

void core_order(Instance& I, Probe& p) {
  const auto& sets = I.sets();
  std::size_t i = 0;
  for (auto [ga, kb] : I.pairs()) {
    const SoftSet g = I.set(ga), k = I.set(kb);
    const SoftSet l = I.set(sets[(i++ * 5 + 1) % sets.size()]);
    const bool antisym = !(is_subset(g, k) && is_subset(k, g)) ||
                         g.encoding() == k.encoding();
    const bool trans = !(is_subset(g, k) && is_subset(k, l)) || is_subset(g, l);
    if (!p.expect(is_subset(g, g) && antisym && trans,
                  [&] { return Parts{{"G", g}, {"K", k}, {"L", l}}; })) {
      return;
    }
  }
}

void core_point_mono(Instance& I, Probe& p) {
  const auto points = all_points(I.sig());
  for (auto [ga, kb] : I.pairs()) {
    const SoftSet g = I.set(ga), k = I.set(kb);
    for (const auto& pt : points) {
      if (!p.check(point_in(pt, g) && is_subset(g, k), point_in(pt, k), [&] {
            return Parts{{"p", to_soft_set(I.sig(), pt)}, {"G", g}, {"K", k}};
          })) {
        return;
      }
    }
  }
}

void core_point_decomp(Instance& I, Probe& p) {
  const auto points = all_points(I.sig());
  for (Mask m : I.sets()) {
    const SoftSet g = I.set(m);
    std::vector<SoftSet> inside;
    for (const auto& pt : points) {
      if (point_in(pt, g)) inside.push_back(to_soft_set(I.sig(), pt));
    }
    if (!p.expect(soft_union(I.sig(), inside) == g, [&] { return Parts{{"G", g}}; })) {
      return;
    }
  }
}

// --------------------------------------------------------------------------
// Topology

void top_duality(Instance& I, Probe& p) {
  const auto& tau = I.tau();
  for (Mask g : I.sets()) {
    const bool ok = I.closure(g) == I.comp(I.interior(I.comp(g))) &&
                    I.interior(g) == raw::interior_by_definition(tau, g) &&
                    I.closure(g) == raw::closure_by_definition(tau, g);
    if (!p.expect(ok, [&] { return parts(I, {{"G", g}}); })) return;
  }
}

void top_kuratowski(Instance& I, Probe& p) {
  for (auto [g, k] : I.pairs()) {
    const Mask ig = I.interior(g), cg = I.closure(g);
    const bool ok =
        subset(ig, g) && subset(g, cg) && I.interior(ig) == ig &&
        I.closure(cg) == cg &&
        (!subset(g, k) || (subset(ig, I.interior(k)) && subset(cg, I.closure(k)))) &&
        I.interior(g & k) == (ig & I.interior(k)) &&
        I.closure(g | k) == (cg | I.closure(k)) &&
        I.interior(I.carrier()) == I.carrier() && I.closure(0) == 0;
    if (!p.expect(ok, [&] { return parts(I, {{"G", g}, {"K", k}}); })) return;
  }
}

std::vector<Mask> naive_generated(Mask full, const std::vector<Mask>& seeds) {
  std::set<Mask> family(seeds.begin(), seeds.end());
  family.insert(0);
  family.insert(full);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Mask> snapshot(family.begin(), family.end());
    for (Mask a : snapshot) {
      for (Mask b : snapshot) {
        grew |= family.insert(a | b).second;
        grew |= family.insert(a & b).second;
      }
    }
  }
  return {family.begin(), family.end()};
}

void top_subbasis(Instance& I, Probe& p) {
  const auto& sig = I.sig();
  const Mask full = sig.full_mask();
  if (I.tau().is_full_space()) {
    const auto opens = I.tau().opens();
    if (!p.expect(from_subbasis(sig, opens) == I.tau(), [] { return Parts{}; },
                  "regenerating the topology from its own opens changed it")) {
      return;
    }
  }
  auto r = I.rng("I.top.subbasis");
  for (int f = 0; f < 16; ++f) {
    const std::size_t size = r.below(5);
    std::vector<Mask> seeds;
    std::vector<SoftSet> seed_sets;
    for (std::size_t i = 0; i < size; ++i) {
      seeds.push_back(Instance::random_subset(r, full));
      seed_sets.push_back(I.set(seeds.back()));
    }
    const SoftTopology t = from_subbasis(sig, seed_sets);
    const auto opens = t.opens();
    bool ok = std::holds_alternative<SoftTopology>(validate_topology(sig, opens));
    for (Mask s : seeds) ok = ok && t.is_open(s);
    if (ok && sig.bit_count() <= 8) {
      const auto naive = naive_generated(full, seeds);
      ok = std::equal(naive.begin(), naive.end(), t.open_masks().begin(),
                      t.open_masks().end());
    }
    if (!p.expect(ok, [&] {
          Parts out;
          for (std::size_t i = 0; i < seed_sets.size(); ++i) {
            out.emplace_back("S" + std::to_string(i + 1), seed_sets[i]);
          }
          return out;
        })) {
      return;
    }
  }
}

void top_subspace_compose(Instance& I, Probe& p) {
  const auto& cs = I.carriers();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Mask v = cs[i], w = cs[(i * 5 + 3) % cs.size()];
    const SoftTopology sv = subspace(I.tau(), I.set(v));
    const auto opens = sv.opens();
    bool ok = std::holds_alternative<SoftTopology>(validate_topology(I.set(v), opens));
    ok = ok && subspace(sv, I.set(w)) == subspace(I.tau(), I.set(v & w));
    if (v == I.carrier()) ok = ok && sv == I.tau();
    if (!p.expect(ok, [&] { return parts(I, {{"V", v}, {"W", w}}); })) return;
  }
}

// --------------------------------------------------------------------------
// Semi structure

void semi_oracle(Instance& I, Probe& p) {
  const auto* o = I.oracle();
  if (!o) return;
  const auto& tau = I.tau();
  if (!p.expect(o->semiopen == I.so() && o->semiclosed == I.sc(), [] { return Parts{}; },
                "enumerated semiopen/semiclosed families differ")) {
    return;
  }
  for (Mask g : I.sets()) {
    const auto hw = raw::semiopen_witness_by_definition(tau, g);
    const auto kw = raw::semiclosed_witness_by_definition(tau, g);
    bool ok = I.semiopen(g) == hw.has_value() && I.semiclosed(g) == kw.has_value() &&
              I.ssint(g) == raw::ssint_by_definition(*o, g) &&
              I.sscl(g) == raw::sscl_by_definition(*o, g);
    if (ok && hw) {
      const Mask h = I.interior(g);
      ok = subset(h, g) && subset(g, I.closure(h)) && tau.is_open(*hw) &&
           subset(*hw, g) && subset(g, I.closure(*hw));
    }
    if (ok && kw) {
      const Mask k = I.closure(g);
      ok = subset(I.interior(k), g) && subset(g, k) && tau.is_closed(*kw) &&
           subset(I.interior(*kw), g) && subset(g, *kw);
    }
    if (!p.expect(ok, [&] { return parts(I, {{"G", g}}); })) return;
  }
}

void e2_2(Instance& I, Probe& p) {
  const auto& sig = I.sig();
  const auto row = [&](std::size_t param, std::initializer_list<std::size_t> xs) {
    Mask m = 0;
    for (auto x : xs) m |= Mask{1} << sig.cell(param, x);
    return m;
  };
  const Mask f1 = row(0, {0, 1}) | row(1, {0});
  const Mask g = row(0, {0, 1}) | row(1, {0});
  const Mask k = row(0, {2}) | row(1, {2});
  const Mask f1c = I.comp(f1);
  if (!p.expect(I.tau().is_open(f1) && subset(f1, g) && subset(g, I.closure(f1)) &&
                    I.semiopen(g),
                [&] { return parts(I, {{"G", g}, {"H", f1}}); },
                "stated witness does not sandwich G")) {
    return;
  }
  p.expect(I.tau().is_closed(f1c) && subset(I.interior(f1c), k) && subset(k, f1c) &&
               I.semiclosed(k),
           [&] { return parts(I, {{"K", k}, {"C", f1c}}); },
           "stated witness does not sandwich K");
}

void r2_3(Instance& I, Probe& p) {
  for (Mask o : I.tau().open_masks()) {
    if (!p.expect(I.semiopen(o) && I.semiclosed(I.comp(o)),
                  [&] { return parts(I, {{"O", o}}); })) {
      return;
    }
  }
}

void r2_3_conv_so(Instance& I, Probe& p) {
  for (Mask g : simplest_first(I.sig(), I.so())) {
    if (!p.expect(I.tau().is_open(g), [&] { return parts(I, {{"G", g}}); },
                  "semiopen but not open")) {
      return;
    }
  }
}

void r2_3_conv_sc(Instance& I, Probe& p) {
  for (Mask k : simplest_first(I.sig(), I.sc())) {
    if (!p.expect(I.tau().is_closed(k), [&] { return parts(I, {{"K", k}}); },
                  "semiclosed but not closed")) {
      return;
    }
  }
}

void r2_4(Instance& I, Probe& p) {
  for (Mask g : {Mask{0}, I.carrier()}) {
    if (!p.expect(I.semiopen(g) && I.semiclosed(g), [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

template <bool Union>
void family_closure(Instance& I, Probe& p, const std::vector<Mask>& family,
                    std::string_view claim) {
  auto member = [&](Mask m) { return Union ? I.semiopen(m) : I.semiclosed(m); };
  auto combine = [&](Mask a, Mask b) { return Union ? (a | b) : (a & b); };
  auto r = I.rng(claim);
  const std::size_t n = family.size();
  if (n * n <= 4096) {
    for (Mask a : family) {
      for (Mask b : family) {
        if (!p.expect(member(combine(a, b)),
                      [&] { return parts(I, {{"G", a}, {"K", b}}); })) {
          return;
        }
      }
    }
  } else {
    for (int i = 0; i < 4096; ++i) {
      const Mask a = family[r.below(n)], b = family[r.below(n)];
      if (!p.expect(member(combine(a, b)),
                    [&] { return parts(I, {{"G", a}, {"K", b}}); })) {
        return;
      }
    }
  }
  for (int f = 0; f < 32; ++f) {
    Mask acc = Union ? 0 : I.carrier();
    std::vector<Mask> picked;
    for (Mask m : family) {
      if (r.next() & 1U) {
        acc = combine(acc, m);
        picked.push_back(m);
      }
    }
    if (!p.expect(member(acc), [&] {
          Parts out;
          for (std::size_t i = 0; i < picked.size(); ++i) {
            out.emplace_back("G" + std::to_string(i + 1), I.set(picked[i]));
          }
          return out;
        })) {
      return;
    }
  }
}

void t2_5(Instance& I, Probe& p) { family_closure<true>(I, p, I.so(), "T2.5"); }
void r2_6(Instance& I, Probe& p) { family_closure<false>(I, p, I.sc(), "R2.6"); }

void t2_7(Instance& I, Probe& p) {
  auto r = I.rng("T2.7");
  for (Mask g : I.so()) {
    const bool go = for_interval(g, I.closure(g) & ~g, r, [&](Mask k) {
      return p.expect(I.semiopen(k), [&] { return parts(I, {{"G", g}, {"K", k}}); });
    });
    if (!go) return;
  }
}

void t2_8(Instance& I, Probe& p) {
  auto r = I.rng("T2.8");
  for (Mask f : I.sc()) {
    const Mask inner = I.interior(f);
    const bool go = for_interval(inner, f & ~inner, r, [&](Mask k) {
      return p.expect(I.semiclosed(k), [&] { return parts(I, {{"F", f}, {"K", k}}); });
    });
    if (!go) return;
  }
}

void t2_9(Instance& I, Probe& p) {
  const auto& so = I.so();
  for (Mask g : I.sets()) {
    bool every_point = true;
    for (Mask pt : points_of(g)) {
      const bool found = std::any_of(so.begin(), so.end(), [&](Mask h) {
        return subset(pt, h) && subset(h, g);
      });
      if (!found) {
        every_point = false;
        break;
      }
    }
    if (!p.expect(I.semiopen(g) == every_point, [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

void p2_10(Instance& I, Probe& p) {
  const auto& so = I.so();
  const auto& sc = I.sc();
  for (Mask g : I.sets()) {
    const Mask cl = I.sscl(g), in = I.ssint(g);
    bool ok = I.semiclosed(cl) && subset(g, cl) && I.semiopen(in) && subset(in, g);
    for (Mask f : sc) ok = ok && (!subset(g, f) || subset(cl, f));
    for (Mask h : so) ok = ok && (!subset(h, g) || subset(h, in));
    if (!p.expect(ok, [&] { return parts(I, {{"G", g}}); })) return;
  }
}

void t2_11_i(Instance& I, Probe& p) {
  for (Mask g : I.sets()) {
    if (!p.expect(I.semiclosed(g) == (g == I.sscl(g)),
                  [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

void t2_11_ii(Instance& I, Probe& p) {
  for (Mask g : I.sets()) {
    if (!p.expect(I.semiopen(g) == (g == I.ssint(g)),
                  [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

void t2_11_iii(Instance& I, Probe& p) {
  for (Mask g : I.sets()) {
    if (!p.expect(I.comp(I.sscl(g)) == I.ssint(I.comp(g)),
                  [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

void t2_11_iv(Instance& I, Probe& p) {
  for (Mask g : I.sets()) {
    if (!p.expect(I.comp(I.ssint(g)) == I.sscl(I.comp(g)),
                  [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

void t2_11_v(Instance& I, Probe& p) {
  for (auto [g, k] : I.pairs()) {
    if (!p.check(subset(g, k), subset(I.ssint(g), I.ssint(k)),
                 [&] { return parts(I, {{"G", g}, {"K", k}}); })) {
      return;
    }
  }
}

void t2_11_vi(Instance& I, Probe& p) {
  for (auto [g, k] : I.pairs()) {
    if (!p.check(subset(g, k), subset(I.sscl(g), I.sscl(k)),
                 [&] { return parts(I, {{"G", g}, {"K", k}}); })) {
      return;
    }
  }
}

void t2_11_vii(Instance& I, Probe& p) {
  p.expect(I.sscl(0) == 0 && I.sscl(I.carrier()) == I.carrier(),
           [] { return Parts{}; });
}

void t2_11_viii(Instance& I, Probe& p) {
  p.expect(I.ssint(0) == 0 && I.ssint(I.carrier()) == I.carrier(),
           [] { return Parts{}; });
}

template <typename Pred>
void over_pairs(Instance& I, Probe& p, Pred&& pred) {
  for (auto [g, k] : I.pairs()) {
    if (!p.expect(pred(g, k), [&] { return parts(I, {{"G", g}, {"K", k}}); })) return;
  }
}

void t2_11_ix(Instance& I, Probe& p) {
  over_pairs(I, p, [&](Mask g, Mask k) { return I.sscl(g | k) == (I.sscl(g) | I.sscl(k)); });
}
void t2_11_x(Instance& I, Probe& p) {
  over_pairs(I, p,
             [&](Mask g, Mask k) { return I.ssint(g & k) == (I.ssint(g) & I.ssint(k)); });
}
void t2_11_xi(Instance& I, Probe& p) {
  over_pairs(I, p,
             [&](Mask g, Mask k) { return subset(I.sscl(g & k), I.sscl(g) & I.sscl(k)); });
}
void t2_11_xii(Instance& I, Probe& p) {
  over_pairs(I, p,
             [&](Mask g, Mask k) { return subset(I.ssint(g) | I.ssint(k), I.ssint(g | k)); });
}
void t2_11_xii_literal(Instance& I, Probe& p) {
  over_pairs(I, p,
             [&](Mask g, Mask k) { return subset(I.ssint(g | k), I.ssint(g) | I.ssint(k)); });
}
void t2_11_xiii(Instance& I, Probe& p) {
  for (Mask g : I.sets()) {
    if (!p.expect(I.sscl(I.sscl(g)) == I.sscl(g), [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}
void t2_11_xiv(Instance& I, Probe& p) {
  for (Mask g : I.sets()) {
    if (!p.expect(I.ssint(I.ssint(g)) == I.ssint(g), [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

void t2_13(Instance& I, Probe& p) {
  const auto& tau = I.tau();
  for (Mask g : I.sets()) {
    const Mask gc = I.comp(g);
    const bool i = raw::semiclosed_witness_by_definition(tau, g).has_value();
    const bool ii = subset(I.interior(I.closure(g)), g);
    const bool iii = subset(gc, I.closure(I.interior(gc)));
    const bool iv = raw::semiopen_witness_by_definition(tau, gc).has_value();
    if (!p.expect(i == ii && ii == iii && iii == iv,
                  [&] { return parts(I, {{"G", g}}); })) {
      return;
    }
  }
}

// --------------------------------------------------------------------------
// Soft maps

template <typename Fn>
void over_maps(Instance& I, Probe& p, Fn&& fn) {
  for (const auto& mc : I.maps()) {
    p.set_map(&mc);
    const bool go = fn(mc, I.target(mc.target));
    p.set_map(nullptr);
    if (!go) return;
  }
}

Parts with_counterwitness(const MapProperty& prop) {
  return prop.counterwitness ? Parts{{"G_B", *prop.counterwitness}} : Parts{};
}

void map_preimage_hom(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto& f = mc.function;
    const Mask ub = ts.topology.signature().full_mask();
    const Mask ua = I.sig().full_mask();
    auto r = I.rng("I.map.preimage_hom", mc.salt);
    for (int i = 0; i < 16; ++i) {
      const Mask g = ts.sets[r.below(ts.sets.size())];
      const Mask k = ts.sets[r.below(ts.sets.size())];
      const bool ok = f.preimage(g | k) == (f.preimage(g) | f.preimage(k)) &&
                      f.preimage(g & k) == (f.preimage(g) & f.preimage(k)) &&
                      f.preimage(ub & ~g) == (ua & ~f.preimage(g)) &&
                      f.preimage(0) == 0 && f.preimage(ub) == ua;
      if (!p.expect(ok, [&] {
            return target_parts(ts.topology, {{"G_B", g}, {"K_B", k}});
          })) {
        return false;
      }
    }
    return true;
  });
}

void map_irr_semicont(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace&) {
    return p.check(mc.classes.irresolute.holds, mc.classes.semicontinuous.holds,
                   [&] { return with_counterwitness(mc.classes.semicontinuous); });
  });
}

void r3_2_a(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto& t = ts.topology;
    bool closed_form = true;
    Mask bad = 0;
    for (Mask o : t.open_masks()) {
      const Mask fc = t.complement(o);
      if (!I.semiclosed(mc.function.preimage(fc))) {
        closed_form = false;
        bad = fc;
        break;
      }
    }
    return p.expect(closed_form == mc.classes.semicontinuous.holds, [&] {
      return closed_form ? with_counterwitness(mc.classes.semicontinuous)
                         : target_parts(t, {{"F_B", bad}});
    });
  });
}

void r3_2_b(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace&) {
    return p.check(mc.classes.semicontinuous.holds, mc.classes.irresolute.holds,
                   [&] { return with_counterwitness(mc.classes.irresolute); },
                   "semicontinuous but the preimage of G_B is not semiopen");
  });
}

// First F with f(sscl F) not inside cl f(F), if any.
std::optional<Mask> sscl_image_failure(Instance& I, const MapCase& mc,
                                       const SoftTopology& t) {
  for (Mask f : I.sets()) {
    const Mask lhs = mc.function.image(I.sscl(f));
    if (!subset(lhs, t.closure(mc.function.image(f)))) return f;
  }
  return std::nullopt;
}

void t3_3_fwd(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    if (!mc.classes.semicontinuous.holds) return p.check(false, true, [] { return Parts{}; });
    const auto bad = sscl_image_failure(I, mc, ts.topology);
    return p.expect(!bad, [&] { return parts(I, {{"F", *bad}}); });
  });
}

void t3_3(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto bad = sscl_image_failure(I, mc, ts.topology);
    return p.expect(!bad == mc.classes.semicontinuous.holds, [&] {
      return bad ? parts(I, {{"F", *bad}}) : with_counterwitness(mc.classes.semicontinuous);
    });
  });
}

void t3_4(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    std::optional<Mask> bad;
    for (Mask h : ts.sets) {
      const Mask pre = mc.function.preimage(h);
      if (!subset(I.interior(pre), I.ssint(pre))) {
        bad = h;
        break;
      }
    }
    return p.expect(!bad == mc.classes.semicontinuous.holds, [&] {
      return bad ? target_parts(ts.topology, {{"H_B", *bad}})
                 : with_counterwitness(mc.classes.semicontinuous);
    }, bad ? "condition fails for a semicontinuous map"
           : "condition holds for every H_B but the map is not semicontinuous");
  });
}

std::optional<Mask> interior_image_failure(Instance& I, const MapCase& mc,
                                           const SoftTopology& t) {
  for (Mask f : I.sets()) {
    if (!subset(mc.function.image(I.interior(f)),
                raw::ssint(t, mc.function.image(f)))) {
      return f;
    }
  }
  return std::nullopt;
}

void t3_5_fwd(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    if (!mc.classes.semiopen_map.holds) return p.check(false, true, [] { return Parts{}; });
    const auto bad = interior_image_failure(I, mc, ts.topology);
    return p.expect(!bad, [&] { return parts(I, {{"F", *bad}}); });
  });
}

void t3_5(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto bad = interior_image_failure(I, mc, ts.topology);
    return p.expect(!bad == mc.classes.semiopen_map.holds, [&] {
      return bad ? parts(I, {{"F", *bad}}) : with_counterwitness(mc.classes.semiopen_map);
    });
  });
}

void t3_6(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto& t = ts.topology;
    const auto& f = mc.function;
    const Mask ub = t.carrier_mask();
    auto r = I.rng("T3.6", mc.salt);
    for (int i = 0; i < 16; ++i) {
      const Mask k = ts.sets[r.below(ts.sets.size())];
      for (Mask o : I.tau().open_masks()) {
        const Mask fa = I.comp(o);
        const bool hyp = mc.classes.semiopen_map.holds && subset(f.preimage(k), fa);
        const Mask h = ub & ~f.image(o);
        const bool ok = raw::semiclosed(t, h) && subset(k, h) && subset(f.preimage(h), fa);
        if (!p.check(hyp, ok, [&] {
              Parts out = target_parts(t, {{"K_B", k}, {"H_B", h}});
              out.emplace_back("F_A", I.set(fa));
              return out;
            })) {
          return false;
        }
      }
    }
    return true;
  });
}

void t3_7(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    std::optional<Mask> bad;
    for (Mask f : I.sets()) {
      if (!subset(raw::sscl(ts.topology, mc.function.image(f)),
                  mc.function.image(I.closure(f)))) {
        bad = f;
        break;
      }
    }
    return p.expect(!bad == mc.classes.semiclosed_map.holds, [&] {
      return bad ? parts(I, {{"F", *bad}}) : with_counterwitness(mc.classes.semiclosed_map);
    });
  });
}

// --------------------------------------------------------------------------
// Compactness

void r4_3(Instance& I, Probe& p) {
  const std::vector<Mask> opens(I.tau().open_masks().begin(), I.tau().open_masks().end());
  const bool compact = minimum_cover(I.carrier(), opens).has_value();
  p.check(compact, I.semicompact().semicompact, [] { return Parts{}; });
}

void t4_4(Instance& I, Probe& p) {
  p.expect(I.semicompact().semiclosed_fip_characterization, [] { return Parts{}; },
           "a semiclosed family with the FIP has null intersection");
}

void t4_5(Instance& I, Probe& p) {
  p.expect(I.semicompact().sscl_fip_characterization, [] { return Parts{}; },
           "a family with the FIP has null intersection of semi-closures");
}

void t4_6(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto& t = ts.topology;
    const auto& f = mc.function;
    std::vector<Mask> cover;
    for (Mask o : t.open_masks()) {
      if (o != t.carrier_mask()) cover.push_back(o);
    }
    Mask all = 0;
    for (Mask o : cover) all |= o;
    if (all != t.carrier_mask()) cover.assign(t.open_masks().begin(), t.open_masks().end());
    std::vector<Mask> pre;
    bool semiopen_cover = true;
    Mask covered = 0;
    for (Mask o : cover) {
      pre.push_back(f.preimage(o));
      semiopen_cover = semiopen_cover && I.semiopen(pre.back());
      covered |= pre.back();
    }
    semiopen_cover = semiopen_cover && subset(I.carrier(), covered);
    bool ok = semiopen_cover;
    if (ok) {
      const auto sub = minimum_cover(I.carrier(), pre);
      Mask image_cover = 0;
      if (sub) {
        for (auto i : *sub) image_cover |= cover[i];
      }
      ok = sub && subset(f.image(I.carrier()), image_cover);
    }
    return p.check(mc.classes.semicontinuous.holds, ok, [] { return Parts{}; },
                   "finite subcover of preimages does not yield a cover of the image");
  });
}

void t4_7(Instance& I, Probe& p) {
  for (Mask v : I.carriers()) {
    const bool hyp = I.semiclosed(v);
    bool ok = true;
    if (hyp) {
      const auto report = is_semicompact(subspace(I.tau(), I.set(v)), v, 64);
      ok = report.semicompact && report.semiclosed_fip_characterization &&
           report.sscl_fip_characterization;
    }
    p.set_carrier(v);
    const bool go = p.check(hyp, ok, [] { return Parts{}; });
    p.set_carrier(std::nullopt);
    if (!go) return;
  }
}

// --------------------------------------------------------------------------
// Connectedness

void t5_3(Instance& I, Probe& p) {
  std::vector<std::pair<Mask, Mask>> separations;
  for (Mask h : I.so()) {
    if (h == 0 || h == I.carrier() || !I.semiopen(I.comp(h))) continue;
    if (h < I.comp(h)) separations.emplace_back(h, I.comp(h));
    if (separations.size() == 8) break;
  }
  for (Mask v : I.carriers()) {
    const bool connected = !find_semiseparation(subspace(I.tau(), I.set(v)));
    for (auto [h, g] : separations) {
      p.set_carrier(v);
      const bool go = p.check(connected, subset(v, h) || subset(v, g),
                              [&] { return parts(I, {{"H", h}, {"G", g}}); });
      p.set_carrier(std::nullopt);
      if (!go) return;
    }
  }
}

void t5_4(Instance& I, Probe& p) {
  for (Mask v : I.carriers()) {
    if (find_semiseparation(subspace(I.tau(), I.set(v)))) {
      p.check(false, true, [] { return Parts{}; });
      continue;
    }
    auto r = I.rng("T5.4", v);
    const bool go = for_interval(v, I.closure(v) & ~v, r, [&](Mask k) {
      const auto sep = find_semiseparation(subspace(I.tau(), I.set(k)));
      p.set_carrier(v);
      const bool cont = p.expect(!sep, [&] {
        Parts out = parts(I, {{"K", k}});
        out.emplace_back("F", sep->first);
        out.emplace_back("G", sep->second);
        return out;
      }, "K has the semiseparation (F, G)");
      p.set_carrier(std::nullopt);
      return cont;
    });
    if (!go) return;
  }
}

void t5_5(Instance& I, Probe& p) {
  const auto sep = find_semiseparation(I.tau());
  const auto pairs = find_semiseparation_by_pairs(I.tau());
  const auto clopen = find_semi_clopen(I.tau());
  p.expect(sep.has_value() == pairs.has_value() && pairs.has_value() == clopen.has_value(),
           [&] {
             Parts out;
             if (sep) out.emplace_back("G", sep->first);
             if (clopen) out.emplace_back("C", *clopen);
             return out;
           });
}

void image_connected(Instance& I, Probe& p, bool irresolute) {
  const bool connected = I.semiconnected();
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const auto& t = ts.topology;
    const bool hyp = connected && (irresolute ? mc.classes.irresolute.holds
                                              : mc.classes.semicontinuous.holds);
    if (!hyp) return p.check(false, true, [] { return Parts{}; });
    const Mask part = mc.function.image(I.carrier());
    const auto& family = irresolute ? raw::soss(t) : std::vector<Mask>(
                                                         t.open_masks().begin(),
                                                         t.open_masks().end());
    const auto sep = find_relative_separation(part, family);
    return p.expect(!sep, [&] {
      return target_parts(t, {{"image", part}, {"K_B", sep->first}, {"H_B", sep->second}});
    });
  });
}

void t5_6(Instance& I, Probe& p) { image_connected(I, p, false); }
void t5_7(Instance& I, Probe& p) { image_connected(I, p, true); }

// --------------------------------------------------------------------------
// Separation axioms

void e6_2(Instance& I, Probe& p) {
  const auto& r = I.axioms()[Axiom::semi_T0];
  p.check(I.tau().is_discrete(), r.holds, [&] { return axiom_parts(r); });
}

void hereditary(Instance& I, Probe& p, Axiom axiom) {
  const bool hyp = I.axioms().holds(axiom);
  for (Mask v : I.carriers()) {
    std::optional<AxiomResult> sub;
    if (hyp) sub = check_axiom(subspace(I.tau(), I.set(v)), axiom);
    p.set_carrier(v);
    const bool go = p.check(hyp, !sub || sub->holds, [&] { return axiom_parts(*sub); });
    p.set_carrier(std::nullopt);
    if (!go) return;
  }
}

void t6_3(Instance& I, Probe& p) { hereditary(I, p, Axiom::semi_T0); }
void t6_6(Instance& I, Probe& p) { hereditary(I, p, Axiom::semi_T1); }
void t6_8(Instance& I, Probe& p) { hereditary(I, p, Axiom::semi_T2); }
void r6_11(Instance& I, Probe& p) { hereditary(I, p, Axiom::semi_T3); }

void t6_5(Instance& I, Probe& p) {
  bool points_closed = true;
  for (Mask pt : points_of(I.carrier())) points_closed = points_closed && I.semiclosed(pt);
  const auto& r = I.axioms()[Axiom::semi_T1];
  p.check(points_closed, r.holds, [&] { return axiom_parts(r); });
}

void implies(Instance& I, Probe& p, Axiom from, Axiom to) {
  const auto& r = I.axioms()[to];
  p.check(I.axioms().holds(from), r.holds, [&] { return axiom_parts(r); },
          std::string(axiom_label(from)) + " holds but " + std::string(axiom_label(to)) +
              " fails");
}

void r6_13(Instance& I, Probe& p) {
  implies(I, p, Axiom::semi_T3, Axiom::semi_T2);
  if (p.failed()) return;
  implies(I, p, Axiom::semi_T2, Axiom::semi_T1);
  if (p.failed()) return;
  implies(I, p, Axiom::semi_T1, Axiom::semi_T0);
}

void r6_15(Instance& I, Probe& p) { implies(I, p, Axiom::semi_T4, Axiom::semi_T3); }

void t6_12(Instance& I, Probe& p) {
  const auto& r = I.axioms()[Axiom::semi_T3];
  p.check(I.semicompact().semicompact && I.axioms().holds(Axiom::semi_T2), r.holds,
          [&] { return axiom_parts(r); });
}

void t6_16(Instance& I, Probe& p) {
  const auto& normal = I.axioms()[Axiom::seminormal];
  const auto ch = seminormal_characterization(I.tau());
  bool ok = normal.holds == ch.holds;
  if (ok && !normal.holds) {
    const auto& w = normal.witnesses.front().parts;
    ok = ch.witness && ch.witness->first.bits() == w[0].second.bits() &&
         ch.witness->second.bits() == I.comp(w[1].second.bits());
  }
  p.expect(ok, [&] {
    Parts out = axiom_parts(normal);
    if (ch.witness) {
      out.emplace_back("F'", ch.witness->first);
      out.emplace_back("G'", ch.witness->second);
    }
    return out;
  });
}

bool target_seminormal(TargetSpace& ts) {
  if (!ts.seminormal) ts.seminormal = check_axiom(ts.topology, Axiom::seminormal).holds;
  return *ts.seminormal;
}

bool invariance_hypothesis(Instance& I, const MapCase& mc) {
  return mc.function.is_surjective() && mc.classes.irresolute.holds &&
         mc.classes.semiopen_map.holds && I.axioms().holds(Axiom::seminormal);
}

void t6_17(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    const bool hyp = invariance_hypothesis(I, mc);
    if (!hyp) return p.check(false, true, [] { return Parts{}; });
    const bool ok = target_seminormal(ts);
    return p.expect(ok, [&] {
      return axiom_parts(check_axiom(ts.topology, Axiom::seminormal));
    });
  });
}

void t6_17_open(Instance& I, Probe& p) {
  over_maps(I, p, [&](const MapCase& mc, TargetSpace& ts) {
    if (!invariance_hypothesis(I, mc)) return p.check(false, true, [] { return Parts{}; });
    const auto& t = ts.topology;
    const auto nbhd = t.neighborhoods();
    auto smallest_open = [&](Mask m) {
      Mask out = 0;
      bits::for_each_cell(m, [&](std::size_t c) { out |= nbhd[c]; });
      return out;
    };
    const auto& sc = raw::scss(t);
    for (Mask l : sc) {
      for (Mask m : sc) {
        if (l & m) continue;
        if (!p.expect((smallest_open(l) & smallest_open(m)) == 0, [&] {
              return target_parts(t, {{"L_B", l}, {"M_B", m}});
            }, "no disjoint open sets contain L_B and M_B")) {
          return false;
        }
      }
    }
    return true;
  });
}

void t6_18(Instance& I, Probe& p) {
  const bool normal = I.axioms().holds(Axiom::seminormal);
  for (Mask v : I.carriers()) {
    const bool hyp = normal && I.semiclosed(v);
    std::optional<AxiomResult> sub;
    if (hyp) sub = check_axiom(subspace(I.tau(), I.set(v)), Axiom::seminormal);
    p.set_carrier(v);
    const bool go = p.check(hyp, !sub || sub->holds, [&] { return axiom_parts(*sub); });
    p.set_carrier(std::nullopt);
    if (!go) return;
  }
}

void t6_19(Instance& I, Probe& p) {
  const auto& r = I.axioms()[Axiom::seminormal];
  p.check(I.semicompact().semicompact && I.axioms().holds(Axiom::semi_T2), r.holds,
          [&] { return axiom_parts(r); });
}

constexpr Tier A = Tier::asserted;
constexpr Tier B = Tier::under_test;

const std::array kEntries = {
    ClaimEntry{{"I.core.lattice", A,
                "union and intersection are associative, commutative, absorptive and "
                "distributive, with null and absolute as identities",
                "sampled triples of soft sets", ""},
               core_lattice},
    ClaimEntry{{"I.core.demorgan", A,
                "complement of a union is the intersection of complements and dually; "
                "complement is an involution",
                "sampled finite families", ""},
               core_demorgan},
    ClaimEntry{{"I.core.order", A, "inclusion is reflexive, antisymmetric and transitive",
                "sampled triples", ""},
               core_order},
    ClaimEntry{{"I.core.point_mono", A,
                "a soft point in G lies in every superset of G",
                "pairs G ⊆ K and every soft point", ""},
               core_point_mono},
    ClaimEntry{{"I.core.point_decomp", A, "G is the union of the soft points it contains",
                "soft sets", ""},
               core_point_decomp},
    ClaimEntry{{"I.top.duality", A,
                "cl G = (int G^c)^c, and interior and closure agree with their "
                "definitions",
                "soft sets", ""},
               top_duality},
    ClaimEntry{{"I.top.kuratowski", A,
                "interior is deflationary, idempotent, monotone and meet-preserving; "
                "closure dually",
                "pairs of soft sets", ""},
               top_kuratowski},
    ClaimEntry{{"I.top.subbasis", A,
                "the generated topology is valid, contains its seeds and equals the "
                "pairwise union/intersection fixpoint",
                "sampled seed families", ""},
               top_subbasis},
    ClaimEntry{{"I.top.subspace_compose", A,
                "a subspace of a subspace is the subspace on the intersected carrier",
                "subspace carriers", ""},
               top_subspace_compose},
    ClaimEntry{{"I.semi.oracle", A,
                "closed-form semiopen/semiclosed tests, ssint, sscl and SOSS/SCSS agree "
                "with definitional enumeration; witnesses satisfy their sandwiches",
                "soft sets", ""},
               semi_oracle},
    ClaimEntry{{"I.map.preimage_hom", A,
                "preimage preserves unions, intersections, complements, null and "
                "absolute",
                "map cases x sampled target pairs", ""},
               map_preimage_hom},
    ClaimEntry{{"I.map.irr_semicont", A, "an irresolute map is semicontinuous",
                "map cases", ""},
               map_irr_semicont},
    ClaimEntry{{"E2.2", A,
                "in FIX-EX, (e1:{h1,h2}, e2:{h1}) is semiopen via F1 and "
                "(e1:{h3}, e2:{h3}) is semiclosed via F1^c",
                "the fixture", "FIX-EX"},
               e2_2},
    ClaimEntry{{"R2.3", A, "open sets are semiopen and closed sets are semiclosed",
                "open sets", ""},
               r2_3},
    ClaimEntry{{"R2.3.conv.so", B, "every semiopen set is open",
                "semiopen sets of the fixture, simplest first", "FIX-EX"},
               r2_3_conv_so},
    ClaimEntry{{"R2.3.conv.sc", B, "every semiclosed set is closed",
                "semiclosed sets of the fixture, simplest first", "FIX-EX"},
               r2_3_conv_sc},
    ClaimEntry{{"R2.4", A, "null and absolute are semiopen and semiclosed",
                "the two extreme sets", ""},
               r2_4},
    ClaimEntry{{"T2.5", A, "unions of semiopen sets are semiopen",
                "pairs and sampled subfamilies of SOSS", ""},
               t2_5},
    ClaimEntry{{"R2.6", A, "intersections of semiclosed sets are semiclosed",
                "pairs and sampled subfamilies of SCSS", ""},
               r2_6},
    ClaimEntry{{"T2.7", A, "G semiopen and G ⊆ K ⊆ cl G imply K semiopen",
                "G in SOSS, K in [G, cl G]", ""},
               t2_7},
    ClaimEntry{{"T2.8", A, "F semiclosed and int F ⊆ K ⊆ F imply K semiclosed",
                "F in SCSS, K in [int F, F]", ""},
               t2_8},
    ClaimEntry{{"T2.9", A,
                "G is semiopen iff each soft point of G lies in a semiopen subset of G",
                "soft sets", ""},
               t2_9},
    ClaimEntry{{"P2.10", A,
                "sscl G is the smallest semiclosed superset and ssint G the largest "
                "semiopen subset of G",
                "soft sets", ""},
               p2_10},
    ClaimEntry{{"T2.11.i", A, "G is semiclosed iff G = sscl G", "soft sets", ""}, t2_11_i},
    ClaimEntry{{"T2.11.ii", A, "G is semiopen iff G = ssint G", "soft sets", ""},
               t2_11_ii},
    ClaimEntry{{"T2.11.iii", A, "(sscl G)^c = ssint(G^c)", "soft sets", ""}, t2_11_iii},
    ClaimEntry{{"T2.11.iv", A, "(ssint G)^c = sscl(G^c)", "soft sets", ""}, t2_11_iv},
    ClaimEntry{{"T2.11.v", A, "G ⊆ K implies ssint G ⊆ ssint K", "pairs with G ⊆ K", ""},
               t2_11_v},
    ClaimEntry{{"T2.11.vi", A, "G ⊆ K implies sscl G ⊆ sscl K", "pairs with G ⊆ K", ""},
               t2_11_vi},
    ClaimEntry{{"T2.11.vii", A, "sscl of null is null and sscl of absolute is absolute",
                "the two extreme sets", ""},
               t2_11_vii},
    ClaimEntry{{"T2.11.viii", A, "ssint of null is null and ssint of absolute is absolute",
                "the two extreme sets", ""},
               t2_11_viii},
    ClaimEntry{{"T2.11.ix", B, "sscl(G ∪ K) = sscl G ∪ sscl K", "pairs of soft sets", ""},
               t2_11_ix},
    ClaimEntry{{"T2.11.x", B, "ssint(G ∩ K) = ssint G ∩ ssint K", "pairs of soft sets", ""},
               t2_11_x},
    ClaimEntry{{"T2.11.xi", A, "sscl(G ∩ K) ⊆ sscl G ∩ sscl K", "pairs of soft sets", ""},
               t2_11_xi},
    ClaimEntry{{"T2.11.xii", A, "ssint G ∪ ssint K ⊆ ssint(G ∪ K)", "pairs of soft sets",
                ""},
               t2_11_xii},
    ClaimEntry{{"T2.11.xii.literal", B, "ssint(G ∪ K) ⊆ ssint G ∪ ssint K",
                "pairs of soft sets", ""},
               t2_11_xii_literal},
    ClaimEntry{{"T2.11.xiii", A, "sscl(sscl G) = sscl G", "soft sets", ""}, t2_11_xiii},
    ClaimEntry{{"T2.11.xiv", A, "ssint(ssint G) = ssint G", "soft sets", ""}, t2_11_xiv},
    ClaimEntry{{"T2.13", A,
                "G semiclosed, int(cl G) ⊆ G, G^c ⊆ cl(int G^c) and G^c semiopen are "
                "equivalent",
                "soft sets", ""},
               t2_13},
    ClaimEntry{{"R3.2.a", A,
                "semicontinuity is equivalent to preimages of closed sets being "
                "semiclosed",
                "map cases", ""},
               r3_2_a},
    ClaimEntry{{"R3.2.b", B, "a semicontinuous map is irresolute", "map cases", ""},
               r3_2_b},
    ClaimEntry{{"T3.3.fwd", A, "f semicontinuous implies f(sscl F) ⊆ cl f(F) for all F",
                "semicontinuous map cases x soft sets", ""},
               t3_3_fwd},
    ClaimEntry{{"T3.3", B, "f is semicontinuous iff f(sscl F) ⊆ cl f(F) for all F",
                "map cases", ""},
               t3_3},
    ClaimEntry{{"T3.4", B,
                "f is semicontinuous iff int f^-1(H) ⊆ ssint f^-1(H) for all H",
                "map cases", ""},
               t3_4},
    ClaimEntry{{"T3.5.fwd", A, "f semiopen implies f(int F) ⊆ ssint f(F) for all F",
                "semiopen map cases x soft sets", ""},
               t3_5_fwd},
    ClaimEntry{{"T3.5", B, "f is semiopen iff f(int F) ⊆ ssint f(F) for all F",
                "map cases", ""},
               t3_5},
    ClaimEntry{{"T3.6", A,
                "for semiopen f, K and closed F ⊇ f^-1(K), H = f(F^c)^c is semiclosed, "
                "contains K and f^-1(H) ⊆ F",
                "semiopen map cases x sampled K x closed F", ""},
               t3_6},
    ClaimEntry{{"T3.7", B, "f is semiclosed iff sscl f(F) ⊆ f(cl F) for all F",
                "map cases", ""},
               t3_7},
    ClaimEntry{{"R4.3", A, "a compact space is semicompact", "instances", ""}, r4_3},
    ClaimEntry{{"T4.4", A,
                "semicompact iff every semiclosed family with the FIP has nonnull "
                "intersection",
                "semiclosed subfamilies (exhaustive up to 12 members)", ""},
               t4_4},
    ClaimEntry{{"T4.5", A,
                "semicompact iff every family with the FIP has nonnull intersection of "
                "semi-closures",
                "sampled families", ""},
               t4_5},
    ClaimEntry{{"T4.6", B,
                "the semicontinuous image of a semicompact space is compact, via the "
                "preimage subcover",
                "semicontinuous map cases", ""},
               t4_6},
    ClaimEntry{{"T4.7", B, "a semiclosed subspace of a semicompact space is semicompact",
                "semiclosed subspace carriers", ""},
               t4_7},
    ClaimEntry{{"T5.3", B,
                "a semiconnected subspace lies inside one side of any semiseparation",
                "semiseparations x semiconnected subspace carriers", ""},
               t5_3},
    ClaimEntry{{"T5.4", B,
                "V semiconnected and V ⊆ K ⊆ cl V imply K semiconnected",
                "semiconnected carriers V x K in [V, cl V]", ""},
               t5_4},
    ClaimEntry{{"T5.5", A,
                "a semiseparation exists iff a nonnull proper semi-clopen set exists",
                "instances", ""},
               t5_5},
    ClaimEntry{{"T5.6", A,
                "a semicontinuous image of a semiconnected space has no separation by "
                "target open sets",
                "semicontinuous map cases from semiconnected sources", ""},
               t5_6},
    ClaimEntry{{"T5.7", A,
                "an irresolute image of a semiconnected space has no separation by "
                "target semiopen sets",
                "irresolute map cases from semiconnected sources", ""},
               t5_7},
    ClaimEntry{{"E6.2", A, "a discrete space is semi-T0", "discrete instances", ""}, e6_2},
    ClaimEntry{{"T6.3", B, "a subspace of a semi-T0 space is semi-T0",
                "semi-T0 instances x subspace carriers", ""},
               t6_3},
    ClaimEntry{{"T6.5", A, "if every soft point is semiclosed the space is semi-T1",
                "instances", ""},
               t6_5},
    ClaimEntry{{"T6.6", B, "a subspace of a semi-T1 space is semi-T1",
                "semi-T1 instances x subspace carriers", ""},
               t6_6},
    ClaimEntry{{"T6.8", B, "a subspace of a semi-T2 space is semi-T2",
                "semi-T2 instances x subspace carriers", ""},
               t6_8},
    ClaimEntry{{"R6.11", B, "a subspace of a semi-T3 space is semi-T3",
                "semi-T3 instances x subspace carriers", ""},
               r6_11},
    ClaimEntry{{"T6.12", B, "a semicompact semi-T2 space is semi-T3", "instances", ""},
               t6_12},
    ClaimEntry{{"R6.13", A, "semi-T3 ⇒ semi-T2 ⇒ semi-T1 ⇒ semi-T0", "instances", ""},
               r6_13},
    ClaimEntry{{"R6.15", A, "semi-T4 ⇒ semi-T3", "instances", ""}, r6_15},
    ClaimEntry{{"T6.16", A,
                "seminormal iff each semiclosed F inside a semiopen G has a semiopen H "
                "with F ⊆ H and sscl H ⊆ G",
                "instances", ""},
               t6_16},
    ClaimEntry{{"T6.17", B,
                "a surjective irresolute semiopen image of a seminormal space is "
                "seminormal",
                "qualifying map cases", ""},
               t6_17},
    ClaimEntry{{"T6.17.open", B,
                "under the same hypotheses, disjoint semiclosed sets of the target lie in "
                "disjoint open sets",
                "qualifying map cases", ""},
               t6_17_open},
    ClaimEntry{{"T6.18", B, "a semiclosed subspace of a seminormal space is seminormal",
                "seminormal instances x semiclosed carriers", ""},
               t6_18},
    ClaimEntry{{"T6.19", B, "a semicompact semi-T2 space is seminormal", "instances", ""},
               t6_19},
};

}  // namespace

std::span<const ClaimEntry> claim_entries() { return kEntries; }

const ClaimEntry& claim_entry(std::string_view id) {
  for (const auto& e : kEntries) {
    if (e.info.id == id) return e;
  }
  throw InvalidInput("unknown claim id '" + std::string(id) + "'");
}

}  // namespace softtopo::detail
