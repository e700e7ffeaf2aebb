#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "softtopo/signature.hpp"

namespace softtopo {

/// Exact minimum set cover over the cells of `universe`: the smallest
/// subfamily of `family` whose union contains `universe`, as ascending
/// indices into `family`. Returns nullopt when the whole family does not
/// cover. Branch and bound: greedy upper bound, lower bound
/// ceil(uncovered / best single coverage), branching on the uncovered cell
/// with the fewest candidates. Ties break by mask value, then index.
std::optional<std::vector<std::size_t>> minimum_cover(
    Mask universe, std::span<const Mask> family);

}  // namespace softtopo
