#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softtopo {

/// Characteristic matrix of a soft set, packed row-major: bit `p * n + x`
/// is set iff universe element `x` belongs to the row of parameter `p`.
using Mask = std::uint64_t;

/// Largest supported lattice width (cells per soft set).
inline constexpr std::size_t kMaxCells = 64;

/// Default cap on lattice bits for anything that enumerates 2^bits sets.
inline constexpr unsigned kDefaultBitCap = 16;

/// Lattice cap in effect: SOFTTOPO_BITCAP when set to a valid integer in
/// [1, 30], otherwise kDefaultBitCap.
unsigned bit_cap();

/// The finite universe U and parameter set A. Cheap to copy; copies share
/// the label storage and compare equal by identity or by labels.
class SpaceSignature {
 public:
  /// Throws InvalidInput on empty or duplicate labels, or when the
  /// matrix would exceed kMaxCells.
  SpaceSignature(std::vector<std::string> universe,
                 std::vector<std::string> parameters);

  /// Signature with labels h1..hn and e1..em.
  static SpaceSignature numbered(std::size_t n, std::size_t m);

  std::size_t universe_size() const noexcept { return data_->universe.size(); }
  std::size_t parameter_count() const noexcept {
    return data_->parameters.size();
  }
  std::size_t bit_count() const noexcept {
    return universe_size() * parameter_count();
  }

  const std::vector<std::string>& universe() const noexcept {
    return data_->universe;
  }
  const std::vector<std::string>& parameters() const noexcept {
    return data_->parameters;
  }

  std::optional<std::size_t> element_index(std::string_view label) const;
  std::optional<std::size_t> parameter_index(std::string_view label) const;

  std::size_t cell(std::size_t parameter, std::size_t element) const noexcept {
    return parameter * universe_size() + element;
  }
  Mask full_mask() const noexcept;
  Mask row_mask(std::size_t parameter) const noexcept;

  friend bool operator==(const SpaceSignature& a, const SpaceSignature& b);

 private:
  struct Data {
    std::vector<std::string> universe;
    std::vector<std::string> parameters;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws SignatureMismatch unless `a == b`.
void require_same_signature(const SpaceSignature& a, const SpaceSignature& b,
                            std::string_view context);

}  // namespace softtopo
