#include <bit>

#include "doctest.h"
#include "helpers.hpp"
#include "softtopo/analysis.hpp"
#include "softtopo/corpus.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/semi.hpp"
#include "softtopo/set_cover.hpp"

using namespace softtopo;
using namespace testing;

namespace {

std::size_t brute_minimum(Mask universe, const std::vector<Mask>& family) {
  std::size_t best = family.size() + 1;
  for (std::uint32_t pick = 0; pick < (1U << family.size()); ++pick) {
    Mask covered = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if ((pick >> i) & 1U) covered |= family[i];
    }
    if ((universe & ~covered) == 0) {
      best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(pick)));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("analyze_cover examples") {
  const auto t = fixtures::fix_ex();
  const auto whole = analyze_cover(t, t.carrier(), std::vector<SoftSet>{t.carrier()});
  CHECK(whole.is_cover);
  CHECK(whole.minimal_subcover == std::vector<std::size_t>{0});

  const auto soss = enumerate_soss(t);
  const auto semi = analyze_cover(t, t.carrier(), soss);
  CHECK(semi.is_cover);
  CHECK(semi.is_semiopen_cover);
  REQUIRE(semi.minimal_subcover.has_value());
  CHECK(semi.minimal_subcover->size() == 1);
  CHECK(soss[semi.minimal_subcover->front()].is_absolute());

  const auto f1 = analyze_cover(t, t.carrier(), std::vector<SoftSet>{fixtures::f1()});
  CHECK_FALSE(f1.is_cover);
  CHECK_FALSE(f1.minimal_subcover.has_value());

  // F1 and its complement are disjoint: the FIP fails on exactly that pair.
  const auto fip = analyze_cover(
      t, t.carrier(), std::vector<SoftSet>{t.carrier(), fixtures::f1(), complement(fixtures::f1())});
  CHECK_FALSE(fip.fip_holds);
  CHECK(fip.fip_violation == std::vector<std::size_t>{1, 2});
  CHECK(fip.is_cover);
  CHECK_FALSE(fip.is_semiopen_cover);
}

TEST_CASE("minimum_cover matches brute force") {
  SplitMix64 r(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned cells = 4 + static_cast<unsigned>(r.below(13));
    const Mask universe = (Mask{1} << cells) - 1;
    std::vector<Mask> family(1 + r.below(12));
    for (auto& m : family) m = r.next() & universe;
    const auto got = minimum_cover(universe, family);
    const std::size_t best = brute_minimum(universe, family);
    if (best > family.size()) {
      CHECK_FALSE(got.has_value());
      continue;
    }
    REQUIRE(got.has_value());
    CHECK(got->size() == best);
    Mask covered = 0;
    for (auto i : *got) covered |= family[i];
    CHECK((universe & ~covered) == 0);
    CHECK(std::is_sorted(got->begin(), got->end()));
  }
  CHECK(minimum_cover(0, std::vector<Mask>{}) == std::vector<std::size_t>{});
  CHECK_FALSE(minimum_cover(1, std::vector<Mask>{}).has_value());
}

TEST_CASE("semicompactness reports") {
  for (const auto& t : {fixtures::fix_ex(), fixtures::fix_ind(), fixtures::fix_dis()}) {
    const auto r = is_semicompact(t);
    CHECK(r.semicompact);
    CHECK(r.semiclosed_fip_characterization);
    CHECK(r.sscl_fip_characterization);
    CHECK_FALSE(r.note.empty());
  }
  const auto ex_r = is_semicompact(fixtures::fix_ex());
  CHECK(ex_r.exhaustive);
  CHECK(ex_r.semiclosed_families_checked == 511);
}

TEST_CASE("semiseparations") {
  CHECK_FALSE(find_semiseparation(fixtures::fix_ind()).has_value());
  CHECK_FALSE(find_semiseparation(fixtures::fix_ex()).has_value());
  CHECK_FALSE(find_semi_clopen(fixtures::fix_ex()).has_value());

  const auto dis = find_semiseparation(fixtures::fix_dis());
  REQUIRE(dis.has_value());
  CHECK(dis->first.bits() == 1);
  CHECK(dis->second.bits() == 2);
  CHECK(find_semiseparation_by_pairs(fixtures::fix_dis()).has_value());
  CHECK(find_semi_clopen(fixtures::fix_dis()).has_value());

  for (const auto& t : enumerate_topologies(SpaceSignature::numbered(2, 2))) {
    const bool a = find_semiseparation(t).has_value();
    CHECK(a == find_semiseparation_by_pairs(t).has_value());
    CHECK(a == find_semi_clopen(t).has_value());
  }

  const std::vector<Mask> family = {0b0011, 0b1100, 0b0110};
  const auto sep = find_relative_separation(0b1111, family);
  REQUIRE(sep.has_value());
  CHECK((sep->first | sep->second) == 0b1111);
  CHECK_FALSE(find_relative_separation(0b0111, std::vector<Mask>{0b0111}).has_value());
}

TEST_CASE("axiom examples") {
  CHECK(check_axiom(fixtures::fix_dis(), Axiom::semi_T0).holds);
  CHECK(check_axiom(fixtures::fix_dis(), Axiom::semi_T2).holds);

  const auto ind = check_axiom(fixtures::fix_ind(), Axiom::semi_T0);
  CHECK_FALSE(ind.holds);
  REQUIRE(ind.witnesses.size() == 1);
  CHECK(ind.witnesses[0].parts[0].second.bits() == 1);
  CHECK(ind.witnesses[0].parts[1].second.bits() == 2);

  const auto all = check_axiom(fixtures::fix_ind(), Axiom::semi_T0, true);
  CHECK(all.violations == 1);

  const auto report = check_axioms(fixtures::fix_ex());
  CHECK(report.results.size() == kAllAxioms.size());
  CHECK_FALSE(report.holds(Axiom::semi_T0));
  CHECK(report.holds(Axiom::semiconnected));
  CHECK(report.holds(Axiom::semicompact));

  CHECK(parse_axiom("semi_T3") == Axiom::semi_T3);
  CHECK(axiom_label(Axiom::seminormal) == "seminormal");
  CHECK_THROWS_AS(parse_axiom("T9"), InvalidInput);
}

TEST_CASE("axioms by direct quantification over points") {
  for (const auto& sig : exhaustive_signatures(CorpusSpec{4, 4, 4})) {
    for (const auto& t : enumerate_topologies(sig)) {
      const auto& so = raw::soss(t);
      const std::size_t cells = sig.bit_count();
      bool t0 = true, t1 = true, t2 = true;
      for (std::size_t i = 0; i < cells; ++i) {
        for (std::size_t j = 0; j < cells; ++j) {
          if (i == j) continue;
          const Mask p = Mask{1} << i, q = Mask{1} << j;
          bool pq = false, qp = false, apart = false;
          for (Mask h : so) {
            pq = pq || ((h & p) && !(h & q));
            qp = qp || ((h & q) && !(h & p));
            for (Mask g : so) apart = apart || ((h & p) && (g & q) && !(h & g));
          }
          if (i < j) t0 = t0 && (pq || qp);
          t1 = t1 && pq;
          t2 = t2 && apart;
        }
      }
      CHECK(check_axiom(t, Axiom::semi_T0).holds == t0);
      CHECK(check_axiom(t, Axiom::semi_T1).holds == t1);
      CHECK(check_axiom(t, Axiom::semi_T2).holds == t2);
    }
  }
}

TEST_CASE("seminormal characterization") {
  CHECK(seminormal_characterization(fixtures::fix_dis()).holds);
  CHECK(seminormal_characterization(fixtures::fix_ind()).holds);
  const auto ex_c = seminormal_characterization(fixtures::fix_ex());
  const auto ex_n = check_axiom(fixtures::fix_ex(), Axiom::seminormal);
  CHECK(ex_c.holds == ex_n.holds);
  REQUIRE(ex_c.witness.has_value());
  CHECK(ex_c.witness->first == ex_n.witnesses[0].parts[0].second);
  CHECK(ex_c.witness->second == complement(ex_n.witnesses[0].parts[1].second));
}
