#include "doctest.h"
#include "helpers.hpp"
#include "softtopo/corpus.hpp"
#include "softtopo/semi.hpp"
#include "softtopo/soft_map.hpp"

using namespace softtopo;
using namespace testing;

namespace {

SoftFunction collapse_params() {
  // h_i -> h_i, e1 -> e1, e2 -> e1, onto a single-parameter signature.
  return SoftFunction(fixtures::ex_signature(), SpaceSignature::numbered(3, 1), {0, 1, 2},
                      {0, 0});
}

}  // namespace

TEST_CASE("image and preimage examples") {
  const auto f = collapse_params();
  const auto tgt = f.target();
  CHECK(image(f, fixtures::f1()) == rows(tgt, {{0, 1}}));
  CHECK(preimage(f, rows(tgt, {{0}})) == ex({{0}, {0}}));
  CHECK(preimage(f, make_absolute(tgt)).is_absolute());
  CHECK(image(f, make_null(f.source())).is_null());
  CHECK(f.is_surjective());

  const auto id = SoftFunction::identity(fixtures::ex_signature());
  for (Mask m = 0; m <= kFull; ++m) {
    CHECK(id.image(m) == m);
    CHECK(id.preimage(m) == m);
  }

  // A constant point map lands on h1 in every parameter hit.
  const SoftFunction c(fixtures::ex_signature(), SpaceSignature::numbered(2, 2), {0, 0, 0},
                       {1, 1});
  CHECK(c.image(kF1) == 0b0100);
  CHECK(c.image(0) == 0);
  CHECK_FALSE(c.is_surjective());
}

TEST_CASE("SoftFunction validation") {
  const auto s = fixtures::ex_signature();
  CHECK_THROWS_AS(SoftFunction(s, s, {0, 1}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(SoftFunction(s, s, {0, 1, 3}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(SoftFunction(s, s, {0, 1, 2}, {0, 2}), InvalidInput);
}

TEST_CASE("image and preimage by cell-by-cell definition") {
  const auto src = SpaceSignature::numbered(3, 2);
  const auto tgt = SpaceSignature::numbered(2, 2);
  const SoftFunction f(src, tgt, {1, 0, 1}, {1, 1});
  for (Mask m = 0; m <= src.full_mask(); ++m) {
    Mask img = 0;
    for (std::size_t e = 0; e < 2; ++e) {
      for (std::size_t x = 0; x < 3; ++x) {
        if ((m >> src.cell(e, x)) & 1U) {
          img |= Mask{1} << tgt.cell(f.param_map()[e], f.point_map()[x]);
        }
      }
    }
    CHECK(f.image(m) == img);
  }
  for (Mask g = 0; g <= tgt.full_mask(); ++g) {
    Mask pre = 0;
    for (std::size_t e = 0; e < 2; ++e) {
      for (std::size_t x = 0; x < 3; ++x) {
        if ((g >> tgt.cell(f.param_map()[e], f.point_map()[x])) & 1U) {
          pre |= Mask{1} << src.cell(e, x);
        }
      }
    }
    CHECK(f.preimage(g) == pre);
  }
}

TEST_CASE("classify_map examples") {
  const auto ex_t = fixtures::fix_ex();
  const auto id = SoftFunction::identity(ex_t.signature());
  const auto c = classify_map(id, ex_t, ex_t);
  CHECK((c.continuous.holds && c.semicontinuous.holds && c.irresolute.holds &&
         c.semiopen_map.holds && c.semiclosed_map.holds));

  // Any map into an indiscrete target is semicontinuous and irresolute.
  const auto ind = indiscrete_topology(SpaceSignature::numbered(3, 1));
  const auto into = classify_map(collapse_params(), ex_t, ind);
  CHECK(into.semicontinuous.holds);
  CHECK(into.irresolute.holds);

  // From a discrete source every preimage is open.
  const auto dis = discrete_topology(ex_t.signature());
  const auto from = classify_map(id, dis, ex_t);
  CHECK(from.continuous.holds);
  CHECK(from.semicontinuous.holds);

  // Identity from FIX-EX onto the discrete space: preimage of (e1 {h1}) is
  // not semiopen in FIX-EX.
  const auto onto = classify_map(id, ex_t, dis);
  CHECK_FALSE(onto.semicontinuous.holds);
  REQUIRE(onto.semicontinuous.counterwitness.has_value());
  CHECK_FALSE(raw::semiopen(ex_t, onto.semicontinuous.counterwitness->bits()));
  CHECK(onto.semiopen_map.holds);
}

TEST_CASE("classify_map against direct quantification") {
  const auto sig = SpaceSignature::numbered(2, 1);
  const auto ts = enumerate_topologies(sig);
  const SoftFunction swap(sig, sig, {1, 0}, {0});
  for (const auto& a : ts) {
    for (const auto& b : ts) {
      bool cont = true, semi = true, irr = true, sopen = true, sclosed = true;
      for (Mask o : b.open_masks()) {
        cont = cont && a.is_open(swap.preimage(o));
        semi = semi && raw::semiopen(a, swap.preimage(o));
      }
      for (Mask s : raw::soss(b)) irr = irr && raw::semiopen(a, swap.preimage(s));
      for (Mask o : a.open_masks()) {
        sopen = sopen && raw::semiopen(b, swap.image(o));
        sclosed = sclosed && raw::semiclosed(b, swap.image(a.complement(o)));
      }
      const auto c = classify_map(swap, a, b);
      CHECK(c.continuous.holds == cont);
      CHECK(c.semicontinuous.holds == semi);
      CHECK(c.irresolute.holds == irr);
      CHECK(c.semiopen_map.holds == sopen);
      CHECK(c.semiclosed_map.holds == sclosed);
    }
  }
}
