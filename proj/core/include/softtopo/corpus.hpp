#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softtopo/topology.hpp"

namespace softtopo {

enum class CorpusMode { exhaustive, random };

/// Exhaustive mode takes every signature with n <= max_n, m <= max_m and
/// n * m <= max_bits (at most 4). Random mode draws `count` topologies
/// over the max_n x max_m signature.
struct CorpusSpec {
  std::size_t max_n = 2;
  std::size_t max_m = 2;
  unsigned max_bits = 4;
  CorpusMode mode = CorpusMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  double density = 0.3;

  friend bool operator==(const CorpusSpec&, const CorpusSpec&) = default;
};

inline constexpr unsigned kExhaustiveBitLimit = 4;

/// Throws InvalidInput for inconsistent bounds.
void validate_spec(const CorpusSpec& spec);

struct Corpus {
  /// Absent for corpora assembled by hand.
  std::optional<CorpusSpec> spec;
  std::vector<SoftTopology> instances;
};

/// Signatures visited by an exhaustive spec, n outer, m inner.
std::vector<SpaceSignature> exhaustive_signatures(const CorpusSpec& spec);

/// Every topology over `sig`, ordered by the bit pattern of its proper
/// nonnull members. Throws CapExceeded beyond kExhaustiveBitLimit bits.
std::vector<SoftTopology> enumerate_topologies(const SpaceSignature& sig);

/// Draws ceil(density * 2^bits) distinct soft sets with SplitMix64(seed)
/// (partial Fisher-Yates over the lattice) and closes them into a topology.
SoftTopology random_topology(const SpaceSignature& sig, std::uint64_t seed,
                             double density, unsigned cap = bit_cap());

/// Instance i of a random corpus uses the i-th output of SplitMix64(spec.seed).
Corpus generate_corpus(const CorpusSpec& spec, unsigned jobs = 1);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
/// First 8 bytes of the SHA-256 digest, big-endian.
std::uint64_t digest64(std::string_view data);

/// 16 hex digits naming an instance by its canonical encoding.
std::string instance_id(const SoftTopology& tau);

/// SHA-256 over the sorted instance encodings, one per line.
std::string fingerprint(std::span<const SoftTopology> instances);

std::string format_spec(const CorpusSpec& spec);
CorpusSpec parse_spec(std::string_view json_text);

/// Writes manifest.json plus one <instance_id>.json per distinct instance.
void export_corpus(const Corpus& corpus, const std::filesystem::path& dir);
/// Throws InvalidInput on a missing or corrupt manifest, a missing space
/// file, or a fingerprint that does not match the loaded instances.
Corpus import_corpus(const std::filesystem::path& dir);

}  // namespace softtopo
