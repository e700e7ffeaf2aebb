#include "softtopo/set_cover.hpp"

#include <algorithm>
#include <array>

#include "softtopo/bits.hpp"

namespace softtopo {

namespace {

struct Candidate {
  Mask cells;
  std::size_t index;
};

class CoverSearch {
 public:
  CoverSearch(Mask universe, std::vector<Candidate> candidates)
      : universe_(universe), candidates_(std::move(candidates)) {
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      bits::for_each_cell(candidates_[i].cells,
                          [&](std::size_t c) { by_cell_[c].push_back(i); });
    }
  }

  std::vector<std::size_t> solve() {
    best_ = greedy();
    std::vector<std::size_t> chosen;
    descend(universe_, chosen);
    return best_;
  }

 private:
  // Index into candidates_ with the largest coverage of `uncovered`.
  std::size_t best_single(Mask uncovered, int* coverage) const {
    std::size_t pick = 0;
    int best = -1;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      const int c = bits::count(candidates_[i].cells & uncovered);
      if (c > best) {
        best = c;
        pick = i;
      }
    }
    *coverage = best;
    return pick;
  }

  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> out;
    Mask uncovered = universe_;
    while (uncovered != 0) {
      int coverage = 0;
      const std::size_t pick = best_single(uncovered, &coverage);
      out.push_back(pick);
      uncovered &= ~candidates_[pick].cells;
    }
    return out;
  }

  void descend(Mask uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    int coverage = 0;
    best_single(uncovered, &coverage);
    const std::size_t remaining = static_cast<std::size_t>(bits::count(uncovered));
    const std::size_t bound =
        chosen.size() + (remaining + static_cast<std::size_t>(coverage) - 1) /
                            static_cast<std::size_t>(coverage);
    if (bound >= best_.size()) return;

    // Branch on the uncovered cell with the fewest covering candidates.
    std::size_t pivot = 0;
    std::size_t fewest = ~std::size_t{0};
    bits::for_each_cell(uncovered, [&](std::size_t c) {
      if (by_cell_[c].size() < fewest) {
        fewest = by_cell_[c].size();
        pivot = c;
      }
    });
    std::vector<std::size_t> options = by_cell_[pivot];
    std::stable_sort(options.begin(), options.end(),
                     [&](std::size_t a, std::size_t b) {
                       return bits::count(candidates_[a].cells & uncovered) >
                              bits::count(candidates_[b].cells & uncovered);
                     });
    for (std::size_t i : options) {
      chosen.push_back(i);
      descend(uncovered & ~candidates_[i].cells, chosen);
      chosen.pop_back();
    }
  }

  Mask universe_;
  std::vector<Candidate> candidates_;
  std::array<std::vector<std::size_t>, 64> by_cell_{};
  std::vector<std::size_t> best_;
};

}  // namespace

std::optional<std::vector<std::size_t>> minimum_cover(
    Mask universe, std::span<const Mask> family) {
  Mask reachable = 0;
  for (Mask m : family) reachable |= m;
  if (!bits::subset(universe, reachable)) return std::nullopt;
  if (universe == 0) return std::vector<std::size_t>{};

  // Canonical candidate order: by clipped mask, then by original index;
  // duplicates and empty members never help.
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Mask cells = family[i] & universe;
    if (cells != 0) candidates.push_back({cells, i});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.cells < b.cells;
                   });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const Candidate& a, const Candidate& b) {
                                 return a.cells == b.cells;
                               }),
                   candidates.end());

  CoverSearch search(universe, candidates);
  std::vector<std::size_t> picks = search.solve();
  std::vector<std::size_t> out;
  out.reserve(picks.size());
  for (std::size_t p : picks) out.push_back(candidates[p].index);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace softtopo
