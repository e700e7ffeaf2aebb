#include "softtopo/fixtures.hpp"

namespace softtopo::fixtures {

namespace {

SpaceSignature pair_signature() { return SpaceSignature({"h1", "h2"}, {"e1"}); }

}  // namespace

SpaceSignature ex_signature() {
  return SpaceSignature({"h1", "h2", "h3"}, {"e1", "e2"});
}

SoftSet f1() { return SoftSet::from_rows(ex_signature(), {{0, 1}, {0}}); }

SoftTopology fix_ex() {
  const auto sig = ex_signature();
  const std::array opens = {make_null(sig), f1(), make_absolute(sig)};
  return SoftTopology(sig, opens);
}

SoftTopology fix_ind() { return indiscrete_topology(pair_signature()); }

SoftTopology fix_dis() { return discrete_topology(pair_signature()); }

std::optional<SoftTopology> by_name(std::string_view name) {
  if (name == "FIX-EX") return fix_ex();
  if (name == "FIX-IND") return fix_ind();
  if (name == "FIX-DIS") return fix_dis();
  return std::nullopt;
}

}  // namespace softtopo::fixtures
