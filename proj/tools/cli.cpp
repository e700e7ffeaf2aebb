#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "softtopo/analysis.hpp"
#include "softtopo/claims.hpp"
#include "softtopo/corpus.hpp"
#include "softtopo/io.hpp"
#include "softtopo/semi.hpp"
#include "softtopo/soft_map.hpp"
#include "softtopo/version.hpp"

namespace softtopo::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Options {
  bool no_banner = false;
  std::string format = "text";
  unsigned jobs = 1;

  // Shared positional and set arguments.
  std::string space;
  std::string set;
  std::string mode = "fast";

  // axioms
  std::string axiom;
  bool all_witnesses = false;

  // suite
  std::vector<std::string> claims;
  std::string tier;
  std::string witness_dir;

  // gen
  std::size_t universe = 0;
  std::size_t params = 0;
  unsigned max_bits = kExhaustiveBitLimit;
  bool exhaustive = false;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double density = 0.3;
  std::string output;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string literal(const SoftSet& g) { return io::format_soft_set(g); }

json literal_json(const SoftSet& g) { return json::parse(literal(g)); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

SoftSet read_set(const SpaceSignature& sig, const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    return io::parse_soft_set(sig, io::read_file(arg.substr(1)));
  }
  return io::parse_soft_set(sig, arg);
}

Mode read_mode(const std::string& mode) {
  if (mode == "fast") return Mode::fast;
  if (mode == "oracle") return Mode::oracle;
  throw InvalidInput("unknown mode '" + mode + "' (expected fast or oracle)");
}

std::string parts_text(const std::vector<std::pair<std::string, SoftSet>>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (const auto& [name, g] : parts) {
    if (!out.empty()) out += " ";
    out += name + "=" + literal(g);
  }
  return out;
}

json parts_json(const std::vector<std::pair<std::string, SoftSet>>& parts) {
  json out = json::object();
  for (const auto& [name, g] : parts) out[name] = literal_json(g);
  return out;
}

// ---------------------------------------------------------------------------

int run_validate(const Options& o, std::ostream& out, std::ostream& err) {
  std::string text;
  if (auto fixture = fs::path(o.space); !fs::exists(fixture)) {
    text = io::format_space(io::load_space(o.space));
  } else {
    text = io::read_file(fixture);
  }
  try {
    const SoftTopology tau = io::parse_space(text);
    if (json_output(o)) {
      json doc = {{"valid", true}, {"opens", tau.size()}};
      if (!tau.is_full_space()) doc["carrier"] = literal_json(tau.carrier());
      out << doc.dump() << "\n";
    } else {
      out << "valid=true\n";
      if (!tau.is_full_space()) out << "carrier=" << literal(tau.carrier()) << "\n";
      out << "opens=" << tau.size() << "\n";
    }
    return Exit::ok;
  } catch (const InvalidTopology& e) {
    const auto& v = e.violation();
    if (json_output(o)) {
      json ws = json::array();
      for (const auto& w : v.witnesses) ws.push_back(literal_json(w));
      out << json{{"valid", false}, {"axiom", axiom_name(v.axiom)}, {"witnesses", ws}}.dump()
          << "\n";
    } else {
      out << "valid=false\naxiom=" << axiom_name(v.axiom) << "\n";
      for (const auto& w : v.witnesses) out << "witness=" << literal(w) << "\n";
    }
    err << "error: invalid-topology: " << v.describe() << "\n";
    return Exit::invalid_input;
  }
}

int run_classify(const Options& o, std::ostream& out) {
  const SoftTopology tau = io::load_space(o.space);
  const SoftSet g = read_set(tau.signature(), o.set);
  const Mode mode = read_mode(o.mode);
  const auto so = is_semiopen(tau, g, mode);
  const auto sc = is_semiclosed(tau, g, mode);
  const bool open = tau.is_open(g), closed = tau.is_closed(g);
  if (json_output(o)) {
    json doc = {{"set", literal_json(g)},   {"open", open},
                {"closed", closed},         {"semiopen", so.holds},
                {"semiclosed", sc.holds},   {"semiopen_witness", nullptr},
                {"semiclosed_witness", nullptr}};
    if (so.witness) doc["semiopen_witness"] = literal_json(*so.witness);
    if (sc.witness) doc["semiclosed_witness"] = literal_json(*sc.witness);
    out << doc.dump() << "\n";
    return Exit::ok;
  }
  out << "set=" << literal(g) << "\n"
      << "open=" << bool_text(open) << "\n"
      << "closed=" << bool_text(closed) << "\n"
      << "semiopen=" << bool_text(so.holds) << "\n"
      << "semiclosed=" << bool_text(sc.holds) << "\n"
      << "semiopen_witness=" << (so.witness ? literal(*so.witness) : "-") << "\n"
      << "semiclosed_witness=" << (sc.witness ? literal(*sc.witness) : "-") << "\n";
  return Exit::ok;
}

int run_operator(const std::string& op, const Options& o, std::ostream& out) {
  const SoftTopology tau = io::load_space(o.space);
  const SoftSet g = read_set(tau.signature(), o.set);
  const Mode mode = read_mode(o.mode);
  const bool oracle = mode == Mode::oracle;
  std::optional<SoftSet> result;
  if (op == "closure") {
    result = oracle ? SoftSet(tau.signature(), raw::closure_by_definition(tau, g.bits()))
                    : closure(tau, g);
  } else if (op == "interior") {
    result = oracle ? SoftSet(tau.signature(), raw::interior_by_definition(tau, g.bits()))
                    : interior(tau, g);
  } else if (op == "sscl") {
    result = sscl(tau, g, mode);
  } else {
    result = ssint(tau, g, mode);
  }
  if (json_output(o)) {
    out << json{{"operator", op}, {"set", literal_json(g)}, {"result", literal_json(*result)}}
               .dump()
        << "\n";
  } else {
    out << literal(*result) << "\n";
  }
  return Exit::ok;
}

int run_axioms(const Options& o, std::ostream& out) {
  const SoftTopology tau = io::load_space(o.space);
  std::vector<AxiomResult> results;
  if (o.axiom.empty()) {
    results = check_axioms(tau, o.all_witnesses).results;
  } else {
    results.push_back(check_axiom(tau, parse_axiom(o.axiom), o.all_witnesses));
  }
  if (json_output(o)) {
    json rows = json::array();
    for (const auto& r : results) {
      json ws = json::array();
      for (const auto& w : r.witnesses) ws.push_back(parts_json(w.parts));
      rows.push_back({{"axiom", axiom_label(r.axiom)},
                      {"holds", r.holds},
                      {"violations", r.violations},
                      {"witnesses", ws}});
    }
    out << rows.dump() << "\n";
  } else {
    for (const auto& r : results) {
      out << axiom_label(r.axiom) << "\t" << bool_text(r.holds) << "\t"
          << (r.witnesses.empty() ? "-" : parts_text(r.witnesses.front().parts));
      if (o.all_witnesses) out << "\tviolations=" << r.violations;
      out << "\n";
      for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
        out << "\t\t" << parts_text(r.witnesses[i].parts) << "\n";
      }
    }
  }
  if (!o.axiom.empty() && !results.front().holds) return Exit::fails;
  return Exit::ok;
}

int run_map_check(const Options& o, std::ostream& out) {
  const auto spec = io::load_function(o.space);
  const auto c = classify_map(spec.function, spec.source, spec.target);
  const std::pair<const char*, const MapProperty*> rows[] = {
      {"continuous", &c.continuous},         {"semicontinuous", &c.semicontinuous},
      {"irresolute", &c.irresolute},         {"semiopen_map", &c.semiopen_map},
      {"semiclosed_map", &c.semiclosed_map},
  };
  const bool surjective = spec.function.is_surjective();
  if (json_output(o)) {
    json doc = {{"surjective", surjective}};
    for (const auto& [name, p] : rows) {
      doc[name] = {{"holds", p->holds},
                   {"counterwitness",
                    p->counterwitness ? literal_json(*p->counterwitness) : json(nullptr)}};
    }
    out << doc.dump() << "\n";
    return Exit::ok;
  }
  out << "surjective\t" << bool_text(surjective) << "\t-\n";
  for (const auto& [name, p] : rows) {
    out << name << "\t" << bool_text(p->holds) << "\t"
        << (p->counterwitness ? literal(*p->counterwitness) : "-") << "\n";
  }
  return Exit::ok;
}

int run_suite(const Options& o, std::ostream& out) {
  std::vector<SoftTopology> instances;
  const bool corpus_dir = fs::is_directory(o.space);
  if (corpus_dir) {
    instances = import_corpus(o.space).instances;
  } else {
    instances.push_back(io::load_space(o.space));
  }
  if (instances.empty()) throw InvalidInput("corpus '" + o.space + "' has no instances");

  SuiteOptions options;
  options.claims = o.claims;
  options.jobs = o.jobs;
  if (!o.tier.empty()) {
    if (o.tier != "A" && o.tier != "B") {
      throw InvalidInput("unknown tier '" + o.tier + "' (expected A or B)");
    }
    options.tier = o.tier == "A" ? Tier::asserted : Tier::under_test;
  }
  SuiteReport report = run_claim_suite(instances, options);
  if (!o.witness_dir.empty()) {
    write_witnesses(report, o.witness_dir);
  } else if (corpus_dir) {
    write_witnesses(report, fs::path(o.space) / "witnesses");
  }
  out << format_report(report, json_output(o) ? ReportFormat::json : ReportFormat::text);
  if (report.asserted_failures() > 0 || !report.coverage_complete()) {
    return Exit::internal_failure;
  }
  return Exit::ok;
}

int run_gen(const Options& o, std::ostream& out) {
  if (o.output.empty()) throw InvalidInput("gen needs -o DIR");
  if (o.exhaustive == (o.count > 0)) {
    throw InvalidInput("gen needs exactly one of --exhaustive or --count");
  }
  CorpusSpec spec;
  spec.max_n = o.universe;
  spec.max_m = o.params;
  if (o.exhaustive) {
    spec.mode = CorpusMode::exhaustive;
    spec.max_bits = o.max_bits;
  } else {
    spec.mode = CorpusMode::random;
    spec.max_bits = static_cast<unsigned>(o.universe * o.params);
    spec.count = o.count;
    spec.seed = o.seed;
    spec.density = o.density;
  }
  const Corpus corpus = generate_corpus(spec, o.jobs);
  export_corpus(corpus, o.output);
  const std::string fp = fingerprint(corpus.instances);
  if (json_output(o)) {
    out << json{{"instances", corpus.instances.size()}, {"fingerprint", fp}}.dump() << "\n";
  } else {
    out << "instances=" << corpus.instances.size() << "\nfingerprint=" << fp << "\n";
  }
  return Exit::ok;
}

int run_replay(const Options& o, std::ostream& out) {
  const fs::path dir = o.space;
  const ClaimRecord record = replay_witness(dir);
  SuiteReport report;
  const SoftTopology space = io::parse_space(io::read_file(dir / "space.json"));
  report.fingerprint = fingerprint(std::span(&space, 1));
  report.instance_count = 1;
  report.records.push_back(record);
  out << format_report(report, json_output(o) ? ReportFormat::json : ReportFormat::text);
  if (record.status != ClaimStatus::refuted) return Exit::ok;
  return record.claim->tier == Tier::asserted ? Exit::internal_failure : Exit::fails;
}

void add_space(CLI::App* sub, Options& o, const char* what = "space file or fixture name",
               const char* name = "space") {
  sub->add_option(name, o.space, what)->required();
}

void add_set(CLI::App* sub, Options& o) {
  sub->add_option("--set", o.set, "soft-set literal or @file")->required();
  sub->add_option("--mode", o.mode, "fast or oracle")->capture_default_str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite soft topologies: semiopen and semiclosed structure", "softtopo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(version()));
  app.add_flag("--no-banner", o.no_banner, "omit the version banner");
  app.add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker threads for suite and gen")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check the topology axioms");
  add_space(validate, o);

  auto* classify = app.add_subcommand("classify", "open/closed/semiopen/semiclosed status");
  add_space(classify, o);
  add_set(classify, o);

  std::vector<std::pair<std::string, CLI::App*>> operators;
  for (const char* op : {"closure", "interior", "sscl", "ssint"}) {
    auto* sub = app.add_subcommand(op, std::string(op) + " of a soft set");
    add_space(sub, o);
    add_set(sub, o);
    operators.emplace_back(op, sub);
  }

  auto* axioms = app.add_subcommand("axioms", "semi separation axioms and companions");
  add_space(axioms, o);
  axioms->add_option("--axiom", o.axiom, "check a single axiom");
  axioms->add_flag("--all-witnesses", o.all_witnesses, "enumerate every violation");

  auto* map_check = app.add_subcommand("map-check", "classify a soft function");
  add_space(map_check, o, "function file", "function");

  auto* suite = app.add_subcommand("suite", "run the claim registry");
  add_space(suite, o, "corpus directory, space file or fixture name");
  suite->add_option("--claims", o.claims, "comma-separated claim ids")->delimiter(',');
  suite->add_option("--tier", o.tier, "A or B");
  suite->add_option("--witness-dir", o.witness_dir, "where refutation bundles go");

  auto* gen = app.add_subcommand("gen", "generate a corpus");
  gen->add_option("--universe", o.universe, "universe size (max for --exhaustive)")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--params", o.params, "parameter count (max for --exhaustive)")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-bits", o.max_bits, "lattice bit bound for --exhaustive")
      ->capture_default_str();
  gen->add_flag("--exhaustive", o.exhaustive, "every topology up to the bounds");
  gen->add_option("--count", o.count, "random instances");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--density", o.density, "seed-set density in [0, 1]")
      ->capture_default_str();
  gen->add_option("-o,--output", o.output, "output directory");

  auto* replay = app.add_subcommand("replay", "re-run a witness bundle");
  add_space(replay, o, "witness bundle directory", "bundle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return Exit::invalid_input;
  }

  // Buffer so a failing command prints nothing but its error line.
  std::ostringstream buffer;
  int code = Exit::ok;
  try {
    if (validate->parsed()) {
      code = run_validate(o, buffer, err);
    } else if (classify->parsed()) {
      code = run_classify(o, buffer);
    } else if (axioms->parsed()) {
      code = run_axioms(o, buffer);
    } else if (map_check->parsed()) {
      code = run_map_check(o, buffer);
    } else if (suite->parsed()) {
      code = run_suite(o, buffer);
    } else if (gen->parsed()) {
      code = run_gen(o, buffer);
    } else if (replay->parsed()) {
      code = run_replay(o, buffer);
    } else {
      for (const auto& [name, sub] : operators) {
        if (sub->parsed()) code = run_operator(name, o, buffer);
      }
    }
  } catch (const InvalidTopology& e) {
    err << "error: invalid-topology: " << e.violation().describe() << "\n";
    return Exit::invalid_input;
  } catch (const SignatureMismatch& e) {
    err << "error: signature-mismatch: " << e.what() << "\n";
    return Exit::invalid_input;
  } catch (const CapExceeded& e) {
    err << "error: cap-exceeded: " << e.what() << "\n";
    return Exit::invalid_input;
  } catch (const InvalidInput& e) {
    err << "error: invalid-input: " << e.what() << "\n";
    return Exit::invalid_input;
  } catch (const fs::filesystem_error& e) {
    err << "error: invalid-input: " << e.what() << "\n";
    return Exit::invalid_input;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return Exit::internal_failure;
  }

  if (!o.no_banner && !json_output(o)) out << "# softtopo " << version() << "\n";
  out << buffer.str();
  return code;
}

}  // namespace softtopo::cli
