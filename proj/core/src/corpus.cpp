#include "softtopo/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "json.hpp"
#include "parallel.hpp"
#include "softtopo/io.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/version.hpp"
#include "topology_impl.hpp"

namespace softtopo {

namespace {

using Json = nlohmann::ordered_json;

std::array<unsigned char, 32> sha256(std::string_view data) {
  std::array<unsigned char, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  return out;
}

const char* mode_name(CorpusMode mode) {
  return mode == CorpusMode::exhaustive ? "exhaustive" : "random";
}

Json spec_json(const CorpusSpec& spec) {
  Json j = Json::object();
  j["mode"] = mode_name(spec.mode);
  j["max_n"] = spec.max_n;
  j["max_m"] = spec.max_m;
  j["max_bits"] = spec.max_bits;
  if (spec.mode == CorpusMode::random) {
    j["seed"] = spec.seed;
    j["count"] = spec.count;
    j["density"] = spec.density;
  }
  return j;
}

CorpusSpec spec_from(const Json& j) {
  if (!j.is_object()) throw InvalidInput("corpus spec: expected object");
  CorpusSpec spec;
  try {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "exhaustive") {
      spec.mode = CorpusMode::exhaustive;
    } else if (mode == "random") {
      spec.mode = CorpusMode::random;
    } else {
      throw InvalidInput("corpus spec: unknown mode '" + mode + "'");
    }
    spec.max_n = j.at("max_n").get<std::size_t>();
    spec.max_m = j.at("max_m").get<std::size_t>();
    spec.max_bits = j.at("max_bits").get<unsigned>();
    if (spec.mode == CorpusMode::random) {
      spec.seed = j.at("seed").get<std::uint64_t>();
      spec.count = j.at("count").get<std::size_t>();
      spec.density = j.at("density").get<double>();
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("corpus spec: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

}  // namespace

void validate_spec(const CorpusSpec& spec) {
  if (spec.max_n == 0 || spec.max_m == 0) {
    throw InvalidInput("corpus spec: universe and parameter bounds must be >= 1");
  }
  if (spec.mode == CorpusMode::exhaustive) {
    if (spec.max_bits == 0 || spec.max_bits > kExhaustiveBitLimit) {
      throw InvalidInput("corpus spec: exhaustive mode needs 1 <= bits <= " +
                         std::to_string(kExhaustiveBitLimit));
    }
  } else {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
      throw InvalidInput("corpus spec: density must lie in [0, 1]");
    }
    if (spec.max_n * spec.max_m > spec.max_bits) {
      throw InvalidInput("corpus spec: " + std::to_string(spec.max_n) + "x" +
                         std::to_string(spec.max_m) + " signature exceeds " +
                         std::to_string(spec.max_bits) + " bits");
    }
  }
}

std::vector<SpaceSignature> exhaustive_signatures(const CorpusSpec& spec) {
  std::vector<SpaceSignature> out;
  for (std::size_t n = 1; n <= spec.max_n; ++n) {
    for (std::size_t m = 1; m <= spec.max_m; ++m) {
      if (n * m <= spec.max_bits) out.push_back(SpaceSignature::numbered(n, m));
    }
  }
  return out;
}

std::vector<SoftTopology> enumerate_topologies(const SpaceSignature& sig) {
  const std::size_t bits = sig.bit_count();
  if (bits > kExhaustiveBitLimit) {
    throw CapExceeded("exhaustive enumeration is limited to " +
                      std::to_string(kExhaustiveBitLimit) + " lattice bits");
  }
  const Mask full = sig.full_mask();
  const std::size_t middle = (std::size_t{1} << bits) - 2;
  std::vector<SoftTopology> out;
  // Membership of a family as a bitmap over the at most 16 soft sets.
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle); ++pick) {
    std::vector<Mask> family = {0};
    std::uint32_t member = 1U | (1U << full);
    for (std::size_t i = 0; i < middle; ++i) {
      if ((pick >> i) & 1U) {
        family.push_back(i + 1);
        member |= 1U << (i + 1);
      }
    }
    family.push_back(full);
    bool closed = true;
    for (std::size_t a = 0; a < family.size() && closed; ++a) {
      for (std::size_t b = a + 1; b < family.size() && closed; ++b) {
        closed = ((member >> (family[a] | family[b])) & 1U) &&
                 ((member >> (family[a] & family[b])) & 1U);
      }
    }
    if (closed) {
      out.push_back(detail::TopologyAccess::trusted(sig, full, std::move(family)));
    }
  }
  return out;
}

SoftTopology random_topology(const SpaceSignature& sig, std::uint64_t seed,
                             double density, unsigned cap) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidInput("density must lie in [0, 1]");
  }
  const std::size_t bits = sig.bit_count();
  if (bits > cap) {
    throw CapExceeded("random topology over " + std::to_string(bits) +
                      " lattice bits exceeds cap " + std::to_string(cap));
  }
  const std::uint64_t lattice = std::uint64_t{1} << bits;
  const auto wanted = static_cast<std::uint64_t>(
      std::ceil(density * static_cast<double>(lattice)));
  const std::uint64_t k = std::min(wanted, lattice);

  std::vector<Mask> pool(lattice);
  std::iota(pool.begin(), pool.end(), Mask{0});
  SplitMix64 rng(seed);
  std::vector<SoftSet> seeds;
  seeds.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + rng.below(lattice - i);
    std::swap(pool[i], pool[j]);
    seeds.emplace_back(sig, pool[i]);
  }
  return from_subbasis(sig, seeds, cap);
}

Corpus generate_corpus(const CorpusSpec& spec, unsigned jobs) {
  validate_spec(spec);
  Corpus corpus;
  corpus.spec = spec;
  if (spec.mode == CorpusMode::exhaustive) {
    for (const auto& sig : exhaustive_signatures(spec)) {
      auto part = enumerate_topologies(sig);
      corpus.instances.insert(corpus.instances.end(),
                              std::make_move_iterator(part.begin()),
                              std::make_move_iterator(part.end()));
    }
    return corpus;
  }
  const auto sig = SpaceSignature::numbered(spec.max_n, spec.max_m);
  SplitMix64 stream(spec.seed);
  std::vector<std::uint64_t> seeds(spec.count);
  for (auto& s : seeds) s = stream.next();
  std::vector<std::optional<SoftTopology>> slots(spec.count);
  detail::parallel_for(spec.count, jobs, [&](std::size_t i) {
    slots[i] = random_topology(sig, seeds[i], spec.density);
  });
  corpus.instances.reserve(spec.count);
  for (auto& s : slots) corpus.instances.push_back(std::move(*s));
  return corpus;
}

std::string sha256_hex(std::string_view data) {
  const auto digest = sha256(data);
  std::string out;
  out.reserve(64);
  char buf[3];
  for (unsigned char byte : digest) {
    std::snprintf(buf, sizeof buf, "%02x", byte);
    out += buf;
  }
  return out;
}

std::uint64_t digest64(std::string_view data) {
  const auto digest = sha256(data);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < 8; ++i) out = (out << 8) | digest[i];
  return out;
}

std::string instance_id(const SoftTopology& tau) {
  return sha256_hex(tau.encoding()).substr(0, 16);
}

std::string fingerprint(std::span<const SoftTopology> instances) {
  std::vector<std::string> encodings;
  encodings.reserve(instances.size());
  for (const auto& t : instances) encodings.push_back(t.encoding());
  std::sort(encodings.begin(), encodings.end());
  std::string joined;
  for (const auto& e : encodings) {
    joined += e;
    joined += '\n';
  }
  return sha256_hex(joined);
}

std::string format_spec(const CorpusSpec& spec) { return spec_json(spec).dump(); }

CorpusSpec parse_spec(std::string_view json_text) {
  try {
    return spec_from(Json::parse(json_text.begin(), json_text.end()));
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("corpus spec: ") + e.what());
  }
}

void export_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Json manifest = Json::object();
  manifest["tool"] = "softtopo";
  manifest["version"] = std::string(version());
  manifest["spec"] = corpus.spec ? spec_json(*corpus.spec) : Json(nullptr);
  manifest["fingerprint"] = fingerprint(corpus.instances);
  Json files = Json::array();
  std::set<std::string> written;
  for (const auto& t : corpus.instances) {
    const std::string name = instance_id(t) + ".json";
    files.push_back(name);
    if (written.insert(name).second) io::write_file(dir / name, io::format_space(t));
  }
  manifest["instances"] = std::move(files);
  io::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

Corpus import_corpus(const std::filesystem::path& dir) {
  const auto manifest_path = dir / "manifest.json";
  if (!std::filesystem::exists(manifest_path)) {
    throw InvalidInput("corpus: missing manifest '" + manifest_path.string() + "'");
  }
  const std::string text = io::read_file(manifest_path);
  Json manifest;
  try {
    manifest = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("corpus: corrupt manifest: ") + e.what());
  }
  Corpus corpus;
  std::string expected;
  try {
    if (manifest.at("tool").get<std::string>() != "softtopo") {
      throw InvalidInput("corpus: manifest was not written by softtopo");
    }
    expected = manifest.at("fingerprint").get<std::string>();
    if (!manifest.at("spec").is_null()) corpus.spec = spec_from(manifest.at("spec"));
    for (const auto& name : manifest.at("instances")) {
      corpus.instances.push_back(
          io::parse_space(io::read_file(dir / name.get<std::string>())));
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("corpus: corrupt manifest: ") + e.what());
  }
  const std::string actual = fingerprint(corpus.instances);
  if (actual != expected) {
    throw InvalidInput("corpus: fingerprint mismatch (manifest " + expected +
                       ", instances " + actual + ")");
  }
  return corpus;
}

}  // namespace softtopo
