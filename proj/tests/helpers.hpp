#pragma once

#include <initializer_list>
#include <vector>

#include "softtopo/fixtures.hpp"
#include "softtopo/soft_set.hpp"

namespace testing {

using softtopo::Mask;
using softtopo::SoftSet;
using softtopo::SpaceSignature;

/// Rows given as universe indices, one list per parameter.
inline SoftSet rows(const SpaceSignature& sig,
                    std::initializer_list<std::vector<std::size_t>> r) {
  return SoftSet::from_rows(sig, std::vector<std::vector<std::size_t>>(r));
}

inline std::vector<SoftSet> all_sets(const SpaceSignature& sig) {
  std::vector<SoftSet> out;
  for (const auto& g : softtopo::enumerate_soft_sets(sig)) out.push_back(g);
  return out;
}

inline SoftSet ex(std::initializer_list<std::vector<std::size_t>> r) {
  return rows(softtopo::fixtures::ex_signature(), r);
}

// FIX-EX masks: cell = parameter * 3 + element.
inline constexpr Mask kF1 = 0b001011;      // e1 {h1,h2}, e2 {h1}
inline constexpr Mask kF1c = 0b110100;     // e1 {h3}, e2 {h2,h3}
inline constexpr Mask kG0 = 0b000001;      // e1 {h1}
inline constexpr Mask kSemiopenG = 27;     // e1 {h1,h2}, e2 {h1,h2}
inline constexpr Mask kSemiclosedK = 36;   // e1 {h3}, e2 {h3}
inline constexpr Mask kFull = 63;

}  // namespace testing
