#include "softtopo/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "softtopo/bits.hpp"
#include "softtopo/fixtures.hpp"

namespace softtopo::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

const Json& member(const Json& obj, const char* key, std::string_view what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(std::string(what) + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::vector<std::string> label_list(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw InvalidInput(std::string(what) + ": labels must be strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

SpaceSignature signature_from(const Json& j) {
  return SpaceSignature(label_list(member(j, "universe", "signature"), "universe"),
                        label_list(member(j, "parameters", "signature"),
                                   "parameters"));
}

Json signature_json(const SpaceSignature& sig) {
  Json j = Json::object();
  j["universe"] = sig.universe();
  j["parameters"] = sig.parameters();
  return j;
}

SoftSet soft_set_from(const SpaceSignature& sig, const Json& j) {
  if (!j.is_object()) throw InvalidInput("soft set literal: expected object");
  Mask bits = 0;
  for (const auto& [key, row] : j.items()) {
    const auto p = sig.parameter_index(key);
    if (!p) throw InvalidInput("soft set literal: unknown parameter '" + key + "'");
    for (const auto& label : label_list(row, "soft set literal")) {
      const auto x = sig.element_index(label);
      if (!x) {
        throw InvalidInput("soft set literal: unknown element '" + label + "'");
      }
      bits |= Mask{1} << sig.cell(*p, *x);
    }
  }
  return SoftSet(sig, bits);
}

Json soft_set_json(const SpaceSignature& sig, Mask m) {
  Json j = Json::object();
  for (std::size_t p = 0; p < sig.parameter_count(); ++p) {
    Json row = Json::array();
    for (std::size_t x = 0; x < sig.universe_size(); ++x) {
      if ((m >> sig.cell(p, x)) & 1U) row.push_back(sig.universe()[x]);
    }
    j[sig.parameters()[p]] = std::move(row);
  }
  return j;
}

SoftTopology space_from(const Json& j) {
  const SpaceSignature sig = signature_from(member(j, "signature", "space"));
  const Json& opens_json = member(j, "opens", "space");
  if (!opens_json.is_array()) throw InvalidInput("space: \"opens\" must be an array");
  std::vector<SoftSet> opens;
  for (const auto& o : opens_json) opens.push_back(soft_set_from(sig, o));
  auto result = j.contains("carrier")
                    ? validate_topology(soft_set_from(sig, j.at("carrier")), opens)
                    : validate_topology(sig, opens);
  if (auto* v = std::get_if<TopologyViolation>(&result)) {
    throw InvalidTopology(std::move(*v));
  }
  return std::get<SoftTopology>(std::move(result));
}

std::vector<std::size_t> index_map(const Json& j, const std::vector<std::string>& from,
                                   const std::vector<std::string>& to,
                                   std::string_view what) {
  if (!j.is_object()) throw InvalidInput(std::string(what) + ": expected object");
  std::vector<std::size_t> out(from.size(), to.size());
  for (const auto& [key, value] : j.items()) {
    auto src = std::find(from.begin(), from.end(), key);
    if (src == from.end()) {
      throw InvalidInput(std::string(what) + ": unknown source label '" + key + "'");
    }
    if (!value.is_string()) {
      throw InvalidInput(std::string(what) + ": values must be labels");
    }
    auto dst = std::find(to.begin(), to.end(), value.get<std::string>());
    if (dst == to.end()) {
      throw InvalidInput(std::string(what) + ": unknown target label '" +
                         value.get<std::string>() + "'");
    }
    out[static_cast<std::size_t>(src - from.begin())] =
        static_cast<std::size_t>(dst - to.begin());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == to.size()) {
      throw InvalidInput(std::string(what) + ": '" + from[i] + "' is not mapped");
    }
  }
  return out;
}

Json label_map_json(const std::vector<std::size_t>& map,
                    const std::vector<std::string>& from,
                    const std::vector<std::string>& to) {
  Json j = Json::object();
  for (std::size_t i = 0; i < map.size(); ++i) j[from[i]] = to[map[i]];
  return j;
}

}  // namespace

SpaceSignature parse_signature(std::string_view text) {
  return signature_from(parse_json(text, "signature"));
}

std::string format_signature(const SpaceSignature& sig) {
  return signature_json(sig).dump();
}

SoftSet parse_soft_set(const SpaceSignature& sig, std::string_view text) {
  return soft_set_from(sig, parse_json(text, "soft set literal"));
}

std::string format_soft_set(const SoftSet& g) {
  return format_soft_set(g.signature(), g.bits());
}

std::string format_soft_set(const SpaceSignature& sig, Mask m) {
  return soft_set_json(sig, m).dump();
}

SoftTopology parse_space(std::string_view text) {
  return space_from(parse_json(text, "space"));
}

std::string format_space(const SoftTopology& tau) {
  const auto& sig = tau.signature();
  std::ostringstream out;
  out << "{\n  \"signature\": " << signature_json(sig).dump() << ",\n";
  if (!tau.is_full_space()) {
    out << "  \"carrier\": " << format_soft_set(sig, tau.carrier_mask()) << ",\n";
  }
  out << "  \"opens\": [\n";
  const auto opens = tau.open_masks();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    out << "    " << format_soft_set(sig, opens[i])
        << (i + 1 < opens.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

FunctionSpec parse_function(std::string_view text, const SpaceResolver& resolve) {
  const Json j = parse_json(text, "function");
  auto space_ref = [&](const char* key) {
    const Json& ref = member(j, key, "function");
    if (ref.is_string()) return resolve(ref.get<std::string>());
    if (ref.is_object()) return space_from(ref);
    throw InvalidInput(std::string("function: \"") + key +
                       "\" must be a path, fixture name or space object");
  };
  SoftTopology source = space_ref("source");
  SoftTopology target = space_ref("target");
  const auto& s = source.signature();
  const auto& t = target.signature();
  SoftFunction f(s, t,
                 index_map(member(j, "point_map", "function"), s.universe(),
                           t.universe(), "point_map"),
                 index_map(member(j, "param_map", "function"), s.parameters(),
                           t.parameters(), "param_map"));
  return FunctionSpec{std::move(source), std::move(target), std::move(f)};
}

std::string format_function(const SoftFunction& f, std::string_view source_ref,
                            std::string_view target_ref) {
  Json j = Json::object();
  j["source"] = source_ref;
  j["target"] = target_ref;
  j["point_map"] = label_map_json(f.point_map(), f.source().universe(),
                                  f.target().universe());
  j["param_map"] = label_map_json(f.param_map(), f.source().parameters(),
                                  f.target().parameters());
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidInput("write failed for '" + path.string() + "'");
}

SoftTopology load_space(std::string_view ref) {
  if (auto fixture = fixtures::by_name(ref)) return *fixture;
  return parse_space(read_file(std::filesystem::path(ref)));
}

FunctionSpec load_function(const std::filesystem::path& path) {
  const auto base = path.parent_path();
  return parse_function(read_file(path), [&](std::string_view ref) {
    if (auto fixture = fixtures::by_name(ref)) return *fixture;
    std::filesystem::path p(ref);
    if (p.is_relative()) p = base / p;
    return parse_space(read_file(p));
  });
}

}  // namespace softtopo::io
