#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/soft_set.hpp"

using namespace softtopo;
using namespace testing;

TEST_CASE("signature construction") {
  const SpaceSignature sig({"h1", "h2", "h3"}, {"e1", "e2"});
  CHECK(sig.universe_size() == 3);
  CHECK(sig.parameter_count() == 2);
  CHECK(sig.bit_count() == 6);
  CHECK(sig.full_mask() == 63);
  CHECK(sig.row_mask(1) == 0b111000);
  CHECK(sig.cell(1, 2) == 5);
  CHECK(sig.element_index("h2") == 1);
  CHECK_FALSE(sig.parameter_index("e9").has_value());
  CHECK(sig == SpaceSignature::numbered(3, 2));
  CHECK_FALSE(sig == SpaceSignature::numbered(2, 3));

  CHECK_THROWS_AS(SpaceSignature({}, {"e1"}), InvalidInput);
  CHECK_THROWS_AS(SpaceSignature({"h1"}, {}), InvalidInput);
  CHECK_THROWS_AS(SpaceSignature({"h1", "h1"}, {"e1"}), InvalidInput);
  CHECK_THROWS_AS(SpaceSignature::numbered(9, 8), InvalidInput);
  CHECK_NOTHROW(SpaceSignature::numbered(8, 8));
}

TEST_CASE("null and absolute") {
  const auto sig = SpaceSignature::numbered(2, 1);
  CHECK(make_null(sig).bits() == 0);
  CHECK(make_absolute(sig).bits() == 0b11);
  CHECK(make_absolute(sig).row(0) == std::vector<std::size_t>{0, 1});
  CHECK(complement(make_absolute(sig)) == make_null(sig));
  CHECK(complement(make_null(sig)) == make_absolute(sig));
  for (const auto& g : enumerate_soft_sets(fixtures::ex_signature())) {
    CHECK(soft_union(make_null(g.signature()), g) == g);
    CHECK(soft_intersection(make_absolute(g.signature()), g) == g);
  }
}

TEST_CASE("union, intersection and complement examples") {
  const auto sig = SpaceSignature::numbered(2, 1);
  CHECK(soft_union(rows(sig, {{0}}), rows(sig, {{1}})) == rows(sig, {{0, 1}}));
  CHECK(soft_intersection(rows(sig, {{0, 1}}), rows(sig, {{1}})) == rows(sig, {{1}}));
  CHECK(soft_union(sig, std::vector<SoftSet>{}).is_null());
  CHECK_THROWS_AS(soft_intersection(std::vector<SoftSet>{}), InvalidInput);

  const SoftSet f1 = fixtures::f1();
  CHECK(f1.bits() == kF1);
  CHECK(complement(f1) == ex({{2}, {1, 2}}));
  CHECK(is_subset(ex({{0}, {}}), f1));
  CHECK_FALSE(is_subset(f1, complement(f1)));
  CHECK(is_disjoint(f1, ex({{2}, {2}})));
  CHECK(difference(fixtures::fix_ex().carrier(), f1) == complement(f1));
}

TEST_CASE("operations reject mixed signatures") {
  const SoftSet a(SpaceSignature::numbered(2, 1), 1);
  const SoftSet b(SpaceSignature::numbered(1, 2), 1);
  CHECK_THROWS_AS(soft_union(a, b), SignatureMismatch);
  CHECK_THROWS_AS(is_subset(a, b), SignatureMismatch);
  CHECK_THROWS_AS(SoftSet(SpaceSignature::numbered(2, 1), 0b100), InvalidInput);
}

TEST_CASE("soft points") {
  const SoftSet f1 = fixtures::f1();
  const auto sig = f1.signature();
  CHECK(point_in({0, 0}, f1));
  CHECK_FALSE(point_in({0, 2}, f1));
  for (const auto& p : all_points(sig)) CHECK(point_in(p, make_absolute(sig)));
  CHECK(all_points(sig).size() == 6);

  // Equality mode only accepts a row equal to the point's singleton.
  CHECK_FALSE(point_in({0, 0}, f1, MembershipMode::equals));
  CHECK(point_in({1, 0}, f1, MembershipMode::equals));

  const SoftSet p = to_soft_set(sig, {1, 2});
  CHECK(p.bits() == Mask{1} << 5);
  CHECK(to_soft_point(p) == SoftPoint{1, 2});
  CHECK_THROWS_AS(to_soft_point(f1), InvalidInput);
  CHECK_THROWS_AS(to_soft_point(make_null(sig)), InvalidInput);
}

TEST_CASE("encoding and canonical order") {
  const SoftSet f1 = fixtures::f1();
  CHECK(f1.encoding() == "110100");
  CHECK(make_null(f1.signature()).encoding() == "000000");

  const auto sets = all_sets(fixtures::ex_signature());
  CHECK(sets.size() == 64);
  CHECK(sets.front().is_null());
  CHECK(sets.back().is_absolute());
  std::set<std::string> encodings;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    encodings.insert(sets[i].encoding());
    if (i > 0) CHECK(sets[i - 1] < sets[i]);
  }
  CHECK(encodings.size() == 64);
  CHECK(std::ranges::distance(enumerate_soft_sets(SpaceSignature::numbered(2, 1))) == 4);
  CHECK_THROWS_AS(enumerate_soft_sets(SpaceSignature::numbered(5, 4)), CapExceeded);
}

TEST_CASE("algebraic laws over every triple of a 4-cell lattice") {
  const auto sig = SpaceSignature::numbered(2, 2);
  const auto sets = all_sets(sig);
  for (const auto& a : sets) {
    CHECK(complement(complement(a)) == a);
    for (const auto& b : sets) {
      CHECK(complement(soft_union(a, b)) ==
            soft_intersection(complement(a), complement(b)));
      CHECK(soft_union(a, soft_intersection(a, b)) == a);
      for (const auto& c : sets) {
        CHECK(soft_intersection(a, soft_union(b, c)) ==
              soft_union(soft_intersection(a, b), soft_intersection(a, c)));
      }
    }
  }
}

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
  CHECK(r.next() == 9817491932198370423ULL);
  CHECK(r.next() == 4593380528125082431ULL);
  CHECK(r.next() == 16408922859458223821ULL);

  SplitMix64 z(0);
  CHECK(z.next() == 16294208416658607535ULL);
  CHECK(z.next() == 7960286522194355700ULL);
  CHECK(z.next() == 487617019471545679ULL);

  SplitMix64 u(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(u.below(10) < 10);
    const double d = u.unit();
    CHECK((d >= 0.0 && d < 1.0));
  }
}
