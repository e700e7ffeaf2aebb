#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "softtopo/soft_map.hpp"
#include "softtopo/topology.hpp"

/// JSON text formats. Literals list every parameter in declared order:
///   soft set   {"e1": ["h1", "h2"], "e2": []}
///   signature  {"universe": ["h1", "h2"], "parameters": ["e1"]}
///   space      {"signature": {...}, "opens": [literal, ...]}
///   function   {"source": ref, "target": ref, "point_map": {...},
///               "param_map": {...}}
/// A space may carry an extra "carrier" literal for a relative topology.
/// Malformed text and unknown labels raise InvalidInput; a space whose
/// opens break an axiom raises InvalidTopology.
namespace softtopo::io {

SpaceSignature parse_signature(std::string_view text);
std::string format_signature(const SpaceSignature& sig);

SoftSet parse_soft_set(const SpaceSignature& sig, std::string_view text);
std::string format_soft_set(const SoftSet& g);
std::string format_soft_set(const SpaceSignature& sig, Mask m);

SoftTopology parse_space(std::string_view text);
std::string format_space(const SoftTopology& tau);

/// Resolves a space reference: a fixture name or a file path.
using SpaceResolver = std::function<SoftTopology(std::string_view ref)>;

struct FunctionSpec {
  SoftTopology source;
  SoftTopology target;
  SoftFunction function;
};

/// "source" and "target" are either references handed to `resolve` or
/// inline space objects.
FunctionSpec parse_function(std::string_view text, const SpaceResolver& resolve);
std::string format_function(const SoftFunction& f, std::string_view source_ref,
                            std::string_view target_ref);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// Fixture name (FIX-EX, FIX-IND, FIX-DIS) or path to a space file.
SoftTopology load_space(std::string_view ref);
/// Relative references inside the file resolve against its directory.
FunctionSpec load_function(const std::filesystem::path& path);

}  // namespace softtopo::io
