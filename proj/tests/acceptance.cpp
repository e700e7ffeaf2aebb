// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <array>
#include <bit>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "softtopo/claims.hpp"
#include "softtopo/corpus.hpp"
#include "softtopo/fixtures.hpp"
#include "softtopo/io.hpp"
#include "softtopo/prng.hpp"
#include "softtopo/semi.hpp"
#include "softtopo/set_cover.hpp"

using namespace softtopo;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and budgets.
constexpr std::size_t kRandomSixBit = 500;
constexpr std::array kRandomDensities = {0.03, 0.05, 0.1};
constexpr double kOracleBudgetSeconds = 60.0;
constexpr std::size_t kCoverInstances = 100;
constexpr std::size_t kCoverMaxFamily = 12;
constexpr unsigned kDeterminismJobs = 4;

struct Verdict {
  bool pass;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str() + err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("softtopo_acceptance_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<SoftTopology> oracle_corpus() {
  std::vector<SoftTopology> out = generate_corpus(CorpusSpec{4, 4, 4}).instances;
  SplitMix64 seeds(20240601);
  const std::array sigs = {SpaceSignature::numbered(3, 2), SpaceSignature::numbered(2, 3),
                           SpaceSignature::numbered(6, 1), SpaceSignature::numbered(1, 6)};
  for (std::size_t i = 0; i < kRandomSixBit; ++i) {
    out.push_back(random_topology(sigs[i % sigs.size()], seeds.next(),
                                  kRandomDensities[i % kRandomDensities.size()]));
  }
  return out;
}

Verdict oracle_equivalence(const std::vector<SoftTopology>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t mismatches = 0, checked = 0;
  for (const auto& t : corpus) {
    const auto fam = raw::oracle_families(t);
    mismatches += fam.semiopen != raw::soss(t);
    mismatches += fam.semiclosed != raw::scss(t);
    for (Mask g = 0; g <= t.carrier_mask(); ++g) {
      ++checked;
      mismatches += raw::semiopen(t, g) != raw::semiopen_witness_by_definition(t, g).has_value();
      mismatches +=
          raw::semiclosed(t, g) != raw::semiclosed_witness_by_definition(t, g).has_value();
      mismatches += raw::ssint(t, g) != raw::ssint_by_definition(fam, g);
      mismatches += raw::sscl(t, g) != raw::sscl_by_definition(fam, g);
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << corpus.size() << " topologies, " << checked << " sets, " << mismatches
    << " mismatches, " << secs << "s";
  return {mismatches == 0 && secs < kOracleBudgetSeconds, d.str()};
}

Verdict tier_a(const std::vector<SoftTopology>& corpus) {
  SuiteOptions opt;
  opt.tier = Tier::asserted;
  opt.jobs = std::max(1U, std::thread::hardware_concurrency());
  const auto report = run_claim_suite(corpus, opt);
  std::ostringstream d;
  d << report.records.size() << " asserted claims, " << report.asserted_failures()
    << " violations";
  for (const auto& r : report.records) {
    if (r.status == ClaimStatus::refuted) d << " [" << r.claim->id << "]";
  }
  return {report.asserted_failures() == 0 && report.coverage_complete(), d.str()};
}

Verdict converse() {
  const std::vector<SoftTopology> corpus = {*fixtures::by_name("FIX-EX")};
  SuiteOptions opt;
  opt.claims = {"R2.3.conv.so", "R2.3.conv.sc"};
  auto report = run_claim_suite(corpus, opt);
  const auto sig = fixtures::ex_signature();
  const SoftSet g = io::parse_soft_set(sig, R"({"e1":["h1","h2"],"e2":["h1","h2"]})");
  const SoftSet k = io::parse_soft_set(sig, R"({"e1":["h3"],"e2":["h3"]})");
  bool ok = report.records.size() == 2;
  for (std::size_t i = 0; ok && i < 2; ++i) {
    const auto& r = report.records[i];
    ok = r.status == ClaimStatus::refuted && r.witness && r.witness->sets.size() == 1 &&
         r.witness->sets[0].second == (i == 0 ? g : k);
  }
  const auto root = scratch("converse");
  write_witnesses(report, root);
  for (const auto& r : report.records) {
    ok = ok && replay_witness(root / r.witness_path).status == ClaimStatus::refuted;
  }
  return {ok, "semiopen-not-open " + io::format_soft_set(g) + ", semiclosed-not-closed " +
                  io::format_soft_set(k) + ", bundles replayed"};
}

Verdict fixture_facts() {
  const auto t = *fixtures::by_name("FIX-EX");
  const Mask f1 = fixtures::f1().bits(), full = t.carrier_mask(), g0 = 1;
  const auto fam = raw::oracle_families(t);
  const std::map<std::string, bool> facts = {
      {"closure(F1)=U", t.closure(f1) == full && raw::closure_by_definition(t, f1) == full},
      {"interior(F1^c)=0",
       t.interior(t.complement(f1)) == 0 && raw::interior_by_definition(t, t.complement(f1)) == 0},
      {"|SOSS|=9", enumerate_soss(t, Mode::fast).size() == 9 &&
                       enumerate_soss(t, Mode::oracle).size() == 9},
      {"sscl(G0)=U", raw::sscl(t, g0) == full && raw::sscl_by_definition(fam, g0) == full},
      {"ssint(G0)=0", raw::ssint(t, g0) == 0 && raw::ssint_by_definition(fam, g0) == 0},
  };
  bool ok = true;
  std::string d;
  for (const auto& [name, holds] : facts) {
    ok = ok && holds;
    d += (d.empty() ? "" : ", ") + name + (holds ? "" : " FAILED");
  }
  return {ok, d};
}

Verdict coverage() {
  const auto dir = scratch("coverage");
  const auto g = cli({"gen", "--universe", "4", "--params", "4", "--exhaustive", "-o",
                      dir.string(), "--no-banner"});
  if (g.code != 0) return {false, "gen failed: " + g.out};
  const auto s = cli({"suite", dir.string(), "--no-banner"});
  std::map<std::string, std::string> lines;
  std::istringstream in(s.out);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    lines[line.substr(0, line.find('\t'))] = line;
  }
  std::size_t holds = 0, refuted = 0, exhausted = 0, missing = 0, bad = 0;
  for (const auto& c : claim_registry()) {
    const auto it = lines.find(std::string(c.id));
    if (it == lines.end()) {
      ++missing;
      continue;
    }
    const auto& line = it->second;
    if (line.find("\trefuted\t") != std::string::npos) {
      ++refuted;
      const auto pos = line.find(" witness=");
      if (pos == std::string::npos ||
          !fs::exists(dir / "witnesses" / line.substr(pos + 9) / "witness.json")) {
        ++bad;
      }
    } else if (line.find("\tholds\t") != std::string::npos) {
      ++holds;
      bad += line.find("scope=") == std::string::npos;
    } else if (line.find("\texhausted\t") != std::string::npos) {
      ++exhausted;
      bad += line.find("hypothesis_instances=0") == std::string::npos;
    } else {
      ++bad;
    }
  }
  std::ostringstream d;
  d << claim_registry().size() << " claims: " << holds << " holds, " << refuted
    << " refuted, " << exhausted << " exhausted, " << missing << " missing, " << bad
    << " malformed; exit " << s.code;
  return {s.code == 0 && missing == 0 && bad == 0, d.str()};
}

Verdict determinism() {
  std::vector<std::string> fps;
  for (const char* name : {"det_a", "det_b"}) {
    const auto dir = scratch(name);
    const auto g = cli({"gen", "--universe", "3", "--params", "2", "--count", "200", "--seed",
                        "42", "--density", "0.3", "-o", dir.string(), "--no-banner"});
    if (g.code != 0) return {false, "gen failed: " + g.out};
    fps.push_back(g.out);
  }
  const auto corpus = (fs::temp_directory_path() / "softtopo_acceptance_det_a").string();
  const auto one = cli({"suite", corpus, "--jobs", "1"});
  const auto many = cli({"suite", corpus, "--jobs", std::to_string(kDeterminismJobs)});
  const bool same_fp = fps[0] == fps[1];
  const bool same_report = one.out == many.out && one.code == many.code;
  std::string fp = fps[0].substr(fps[0].find("fingerprint=") + 12, 16);
  return {same_fp && same_report,
          "fingerprint " + fp + (same_fp ? " stable" : " differs") + ", report " +
              std::to_string(one.out.size()) + " bytes " +
              (same_report ? "identical" : "differs") + " for jobs 1 and " +
              std::to_string(kDeterminismJobs)};
}

Verdict subcover() {
  SplitMix64 r(7);
  std::size_t agree = 0, infeasible = 0;
  for (std::size_t n = 0; n < kCoverInstances; ++n) {
    const unsigned cells = 6 + static_cast<unsigned>(r.below(11));
    const Mask universe = (Mask{1} << cells) - 1;
    std::vector<Mask> family(1 + r.below(kCoverMaxFamily));
    for (auto& m : family) m = r.next() & universe;
    std::size_t best = family.size() + 1;
    for (std::uint32_t pick = 0; pick < (1U << family.size()); ++pick) {
      Mask covered = 0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if ((pick >> i) & 1U) covered |= family[i];
      }
      if ((universe & ~covered) == 0) {
        best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(pick)));
      }
    }
    const auto got = minimum_cover(universe, family);
    if (best > family.size()) {
      ++infeasible;
      agree += !got.has_value();
    } else {
      agree += got.has_value() && got->size() == best;
    }
  }
  return {agree == kCoverInstances,
          std::to_string(agree) + "/" + std::to_string(kCoverInstances) + " agree (" +
              std::to_string(infeasible) + " without a cover)"};
}

}  // namespace

int main() {
  const auto corpus = oracle_corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"tier-A invariants", [&] { return tier_a(corpus); }},
      {"converse refutation", converse},
      {"fixture facts", fixture_facts},
      {"registry coverage", coverage},
      {"determinism", determinism},
      {"minimal subcover", subcover},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << "criterion " << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << " "
              << criteria[i].first << ": " << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
