#pragma once

#include <bit>
#include <cstddef>

#include "softtopo/signature.hpp"

namespace softtopo::bits {

inline constexpr bool subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

inline constexpr int count(Mask m) noexcept { return std::popcount(m); }

/// Calls fn(sub) for every submask of `carrier` in increasing numeric order,
/// starting with 0 and ending with `carrier`.
template <typename Fn>
void for_each_submask(Mask carrier, Fn&& fn) {
  Mask sub = 0;
  do {
    fn(sub);
    sub = (sub - carrier) & carrier;
  } while (sub != 0);
}

/// Calls fn(cell_index) for each set bit, lowest first.
template <typename Fn>
void for_each_cell(Mask m, Fn&& fn) {
  while (m != 0) {
    const int cell = std::countr_zero(m);
    fn(static_cast<std::size_t>(cell));
    m &= m - 1;
  }
}

}  // namespace softtopo::bits
