#include "softtopo/claims.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "claim_context.hpp"
#include "json.hpp"
#include "parallel.hpp"
#include "softtopo/corpus.hpp"
#include "softtopo/error.hpp"
#include "softtopo/fixtures.hpp"
#include "softtopo/io.hpp"

namespace softtopo {

namespace {

using json = nlohmann::ordered_json;
using detail::ClaimEntry;

constexpr std::array<std::string_view, 8> kSemantics = {
    "complement is relative: G^c(e) = U - G(e) inside the carrier",
    "disjoint soft sets have null intersection",
    "soft points are singletons at one parameter; p lies in G iff its element "
    "lies in G at its parameter",
    "separation axioms quantify over soft points of the carrier, distinct as "
    "soft sets",
    "f(F)(b) is the union of point images of F(a) over a with param_map(a) = b; "
    "f^-1(G)(a) is the point preimage of G(param_map(a))",
    "a separation of an image is taken relative to the image set",
    "ssint G ∪ ssint K ⊆ ssint(G ∪ K) is asserted; the reverse inclusion is "
    "under test",
    "converse witnesses are reported simplest first: fewest distinct rows, "
    "then fewest cells, then canonical order",
};

const std::vector<ClaimInfo>& registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : detail::claim_entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

struct Outcome {
  std::size_t cases = 0;
  std::size_t hypothesis_cases = 0;
  std::optional<ClaimWitness> witness;
};

Outcome evaluate(const ClaimEntry& entry, detail::Instance& inst) {
  detail::Probe probe(inst);
  entry.check(inst, probe);
  return {probe.cases(), probe.hypothesis_cases(), std::move(probe.witness())};
}

void merge(ClaimRecord& record, Outcome&& o) {
  ++record.instances;
  record.cases += o.cases;
  record.hypothesis_cases += o.hypothesis_cases;
  if (o.hypothesis_cases > 0) ++record.hypothesis_instances;
  if (o.witness) {
    ++record.failing_instances;
    if (!record.witness) record.witness = std::move(o.witness);
  }
}

void settle(ClaimRecord& record) {
  if (record.failing_instances > 0) {
    record.status = ClaimStatus::refuted;
  } else if (record.hypothesis_instances > 0) {
    record.status = ClaimStatus::holds;
  } else {
    record.status = ClaimStatus::exhausted;
  }
}

std::vector<const ClaimEntry*> select(const SuiteOptions& options) {
  std::vector<bool> wanted(detail::claim_entries().size(), options.claims.empty());
  for (const auto& id : options.claims) {
    const ClaimEntry& e = detail::claim_entry(id);
    wanted[static_cast<std::size_t>(&e - detail::claim_entries().data())] = true;
  }
  std::vector<const ClaimEntry*> out;
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    const auto& e = detail::claim_entries()[i];
    if (wanted[i] && (!options.tier || e.info.tier == *options.tier)) out.push_back(&e);
  }
  return out;
}

std::string instance_name(std::size_t index, const SoftTopology& tau) {
  return std::to_string(index) + ":" + instance_id(tau);
}

json literal(const SoftSet& g) { return json::parse(io::format_soft_set(g)); }

std::string describe_map(const SoftFunction& f) {
  std::string out;
  const auto& s = f.source();
  const auto& t = f.target();
  for (std::size_t x = 0; x < s.universe_size(); ++x) {
    out += (x ? "," : "") + s.universe()[x] + ">" + t.universe()[f.point_map()[x]];
  }
  out += ";";
  for (std::size_t e = 0; e < s.parameter_count(); ++e) {
    out += (e ? "," : "") + s.parameters()[e] + ">" + t.parameters()[f.param_map()[e]];
  }
  return out;
}

json map_json(const SoftFunction& f) {
  json points = json::object(), params = json::object();
  for (std::size_t x = 0; x < f.source().universe_size(); ++x) {
    points[f.source().universe()[x]] = f.target().universe()[f.point_map()[x]];
  }
  for (std::size_t e = 0; e < f.source().parameter_count(); ++e) {
    params[f.source().parameters()[e]] = f.target().parameters()[f.param_map()[e]];
  }
  return {{"point_map", points}, {"param_map", params}};
}

json witness_json(const ClaimWitness& w) {
  json sets = json::object();
  for (const auto& [name, g] : w.sets) sets[name] = literal(g);
  json out = {{"instance", w.instance}, {"sets", sets}};
  if (w.carrier) out["carrier"] = literal(*w.carrier);
  if (w.function) {
    out["function"] = map_json(*w.function);
    out["target"] = instance_id(*w.target);
  }
  out["note"] = w.note;
  return out;
}

std::string text_details(const ClaimRecord& r) {
  std::ostringstream out;
  if (r.status != ClaimStatus::refuted) {
    out << "instances=" << r.instances << " hypothesis_instances=" << r.hypothesis_instances
        << " cases=" << r.cases << " hypothesis_cases=" << r.hypothesis_cases
        << " scope=\"" << r.claim->scope << "\"";
    return out.str();
  }
  const auto& w = *r.witness;
  out << "failing=" << r.failing_instances << "/" << r.instances
      << " instance=" << w.instance;
  for (const auto& [name, g] : w.sets) out << " " << name << "=" << io::format_soft_set(g);
  if (w.carrier) out << " carrier=" << io::format_soft_set(*w.carrier);
  if (w.function) {
    out << " target=" << instance_id(*w.target) << " map=" << describe_map(*w.function);
  }
  if (!w.note.empty()) out << " note=\"" << w.note << "\"";
  if (!r.witness_path.empty()) out << " witness=" << r.witness_path;
  return out.str();
}

}  // namespace

std::string_view tier_label(Tier tier) {
  return tier == Tier::asserted ? "A" : "B";
}

std::string_view status_label(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::exhausted: return "exhausted";
  }
  return "?";
}

std::span<const ClaimInfo> claim_registry() { return registry(); }

const ClaimInfo& find_claim(std::string_view id) {
  const auto& e = detail::claim_entry(id);
  return registry()[static_cast<std::size_t>(&e - detail::claim_entries().data())];
}

std::span<const std::string_view> adopted_semantics() { return kSemantics; }

std::size_t SuiteReport::asserted_failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
    return r.claim->tier == Tier::asserted && r.status == ClaimStatus::refuted;
  }));
}

bool SuiteReport::coverage_complete() const {
  return std::all_of(records.begin(), records.end(),
                     [](const auto& r) { return r.instances > 0; });
}

SuiteReport run_claim_suite(std::span<const SoftTopology> corpus,
                            const SuiteOptions& options) {
  const auto selected = select(options);
  std::vector<const ClaimEntry*> per_instance, per_fixture;
  for (const auto* e : selected) {
    (e->info.fixture.empty() ? per_instance : per_fixture).push_back(e);
  }

  std::vector<std::vector<Outcome>> outcomes(corpus.size());
  detail::parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
    detail::Instance inst(corpus[i], instance_name(i, corpus[i]));
    auto& row = outcomes[i];
    row.reserve(per_instance.size());
    for (const auto* e : per_instance) row.push_back(evaluate(*e, inst));
  });

  SuiteReport report;
  report.fingerprint = fingerprint(corpus);
  report.instance_count = corpus.size();
  for (const auto* e : selected) {
    ClaimRecord record;
    record.claim = &find_claim(e->info.id);
    if (e->info.fixture.empty()) {
      const auto k = static_cast<std::size_t>(
          std::find(per_instance.begin(), per_instance.end(), e) - per_instance.begin());
      for (auto& row : outcomes) merge(record, std::move(row[k]));
    } else {
      detail::Instance inst(*fixtures::by_name(e->info.fixture),
                            std::string(e->info.fixture));
      merge(record, evaluate(*e, inst));
    }
    settle(record);
    report.records.push_back(std::move(record));
  }
  return report;
}

std::string format_report(const SuiteReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    json claims = json::array();
    for (const auto& r : report.records) {
      json c = {{"id", r.claim->id},
                {"tier", tier_label(r.claim->tier)},
                {"status", status_label(r.status)},
                {"statement", r.claim->statement},
                {"scope", r.claim->scope},
                {"instances", r.instances},
                {"hypothesis_instances", r.hypothesis_instances},
                {"failing_instances", r.failing_instances},
                {"cases", r.cases},
                {"hypothesis_cases", r.hypothesis_cases}};
      if (r.witness) {
        c["witness"] = witness_json(*r.witness);
        if (!r.witness_path.empty()) c["witness"]["path"] = r.witness_path;
      }
      claims.push_back(std::move(c));
    }
    json out = {{"instances", report.instance_count},
                {"fingerprint", report.fingerprint},
                {"semantics", adopted_semantics()},
                {"asserted_failures", report.asserted_failures()},
                {"coverage_complete", report.coverage_complete()},
                {"claims", claims}};
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "# instances: " << report.instance_count
      << "  fingerprint: " << report.fingerprint << "\n";
  for (auto s : adopted_semantics()) out << "# semantics: " << s << "\n";
  std::array<std::size_t, 3> counts{};
  for (const auto& r : report.records) {
    ++counts[static_cast<std::size_t>(r.status)];
    out << r.claim->id << "\t" << tier_label(r.claim->tier) << "\t"
        << status_label(r.status) << "\t" << text_details(r) << "\n";
  }
  out << "# summary: holds " << counts[0] << "  refuted " << counts[1]
      << "  exhausted " << counts[2] << "  asserted-failures "
      << report.asserted_failures()
      << "  coverage " << (report.coverage_complete() ? "complete" : "incomplete")
      << "\n";
  return out.str();
}

void write_witness_bundle(const ClaimRecord& record, const std::filesystem::path& dir) {
  if (!record.witness) {
    throw InvalidInput("claim " + std::string(record.claim->id) + " has no witness");
  }
  const auto& w = *record.witness;
  std::filesystem::create_directories(dir);
  io::write_file(dir / "space.json", io::format_space(w.space));
  json sets = json::object();
  for (const auto& [name, g] : w.sets) sets[name] = literal(g);
  json doc = {{"claim", record.claim->id},
              {"tier", tier_label(record.claim->tier)},
              {"status", status_label(record.status)},
              {"instance", w.instance},
              {"sets", sets}};
  if (w.carrier) doc["carrier"] = literal(*w.carrier);
  doc["note"] = w.note;
  if (w.function) {
    io::write_file(dir / "target.json", io::format_space(*w.target));
    io::write_file(dir / "function.json",
                   io::format_function(*w.function, "space.json", "target.json"));
  }
  io::write_file(dir / "witness.json", doc.dump(2) + "\n");
}

void write_witnesses(SuiteReport& report, const std::filesystem::path& root) {
  for (auto& r : report.records) {
    if (r.status != ClaimStatus::refuted) continue;
    const std::string rel = std::string(r.claim->id) + "/0";
    write_witness_bundle(r, root / r.claim->id / "0");
    r.witness_path = rel;
  }
}

ClaimRecord replay_witness(const std::filesystem::path& dir) {
  json doc;
  try {
    doc = json::parse(io::read_file(dir / "witness.json"));
  } catch (const json::exception& e) {
    throw InvalidInput("corrupt witness.json: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("claim") || !doc["claim"].is_string()) {
    throw InvalidInput("witness.json has no claim id");
  }
  const auto& entry = detail::claim_entry(doc["claim"].get<std::string>());
  const SoftTopology space = io::parse_space(io::read_file(dir / "space.json"));

  detail::Pinned pinned;
  if (doc.contains("carrier")) {
    pinned.carrier = io::parse_soft_set(space.signature(), doc["carrier"].dump()).bits();
  }
  if (std::filesystem::exists(dir / "function.json")) {
    auto spec = io::load_function(dir / "function.json");
    pinned.map.emplace(std::move(spec.target), std::move(spec.function));
  }
  const std::string name =
      doc.contains("instance") && doc["instance"].is_string()
          ? doc["instance"].get<std::string>()
          : std::string("replay");
  detail::Instance inst(space, name, &pinned);
  ClaimRecord record;
  record.claim = &find_claim(entry.info.id);
  merge(record, evaluate(entry, inst));
  settle(record);
  return record;
}

}  // namespace softtopo
