#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "softtopo/topology.hpp"

namespace softtopo::fixtures {

/// U = {h1, h2, h3}, A = {e1, e2}.
SpaceSignature ex_signature();
/// F1 = (e1 -> {h1, h2}, e2 -> {h1}).
SoftSet f1();
/// {Φ_A, F1, U_A} over ex_signature().
SoftTopology fix_ex();
/// U = {h1, h2}, A = {e1}; indiscrete.
SoftTopology fix_ind();
/// U = {h1, h2}, A = {e1}; discrete.
SoftTopology fix_dis();

inline constexpr std::array<std::string_view, 3> kNames = {"FIX-EX", "FIX-IND",
                                                           "FIX-DIS"};
std::optional<SoftTopology> by_name(std::string_view name);

}  // namespace softtopo::fixtures
