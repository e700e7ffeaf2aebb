#include "softtopo/signature.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <unordered_set>

#include "softtopo/error.hpp"
#include "softtopo/version.hpp"

namespace softtopo {

unsigned bit_cap() {
  static const unsigned cap = [] {
    const char* env = std::getenv("SOFTTOPO_BITCAP");
    if (env == nullptr) return kDefaultBitCap;
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1 || value > 30) {
      return kDefaultBitCap;
    }
    return value;
  }();
  return cap;
}

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) {
    throw InvalidInput(std::string("signature has no ") + what);
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw InvalidInput(std::string("empty label in ") + what);
    }
    if (!seen.insert(label).second) {
      throw InvalidInput(std::string("duplicate label '") + label + "' in " +
                         what);
    }
  }
}

}  // namespace

SpaceSignature::SpaceSignature(std::vector<std::string> universe,
                               std::vector<std::string> parameters) {
  check_labels(universe, "universe");
  check_labels(parameters, "parameters");
  if (universe.size() * parameters.size() > kMaxCells) {
    throw InvalidInput("signature needs " +
                       std::to_string(universe.size() * parameters.size()) +
                       " cells; at most 64 are supported");
  }
  data_ = std::make_shared<const Data>(
      Data{std::move(universe), std::move(parameters)});
}

SpaceSignature SpaceSignature::numbered(std::size_t n, std::size_t m) {
  std::vector<std::string> universe;
  std::vector<std::string> parameters;
  for (std::size_t i = 1; i <= n; ++i) universe.push_back("h" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) parameters.push_back("e" + std::to_string(i));
  return SpaceSignature(std::move(universe), std::move(parameters));
}

std::optional<std::size_t> SpaceSignature::element_index(
    std::string_view label) const {
  const auto& u = data_->universe;
  auto it = std::find(u.begin(), u.end(), label);
  if (it == u.end()) return std::nullopt;
  return static_cast<std::size_t>(it - u.begin());
}

std::optional<std::size_t> SpaceSignature::parameter_index(
    std::string_view label) const {
  const auto& a = data_->parameters;
  auto it = std::find(a.begin(), a.end(), label);
  if (it == a.end()) return std::nullopt;
  return static_cast<std::size_t>(it - a.begin());
}

Mask SpaceSignature::full_mask() const noexcept {
  const std::size_t bits = bit_count();
  return bits == 64 ? ~Mask{0} : ((Mask{1} << bits) - 1);
}

Mask SpaceSignature::row_mask(std::size_t parameter) const noexcept {
  const std::size_t n = universe_size();
  const Mask row = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  return row << (parameter * n);
}

bool operator==(const SpaceSignature& a, const SpaceSignature& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->universe == b.data_->universe &&
         a.data_->parameters == b.data_->parameters;
}

void require_same_signature(const SpaceSignature& a, const SpaceSignature& b,
                            std::string_view context) {
  if (!(a == b)) {
    throw SignatureMismatch(std::string(context) +
                            ": operands use different signatures");
  }
}

}  // namespace softtopo

namespace softtopo {

std::string_view version() noexcept { return SOFTTOPO_VERSION; }

}  // namespace softtopo
