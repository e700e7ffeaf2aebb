#include <filesystem>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "softtopo/claims.hpp"
#include "softtopo/corpus.hpp"
#include "softtopo/io.hpp"

using namespace softtopo;
using namespace testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("softtopo_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("exhaustive corpus shape") {
  const CorpusSpec spec{4, 4, 4};
  const auto sigs = exhaustive_signatures(spec);
  CHECK(sigs.size() == 8);
  const Corpus c = generate_corpus(spec);
  CHECK(c.instances.size() == 1132);
  CHECK(fingerprint(c.instances) ==
        "9b20a657bd284c39e48a4093d5138a527ac843e9d007b12e19493104af7453a7");

  const Corpus two = generate_corpus(CorpusSpec{2, 1, 2});
  CHECK(two.instances.size() == 5);

  CHECK_THROWS_AS(validate_spec(CorpusSpec{5, 1, 5}), InvalidInput);
  CHECK_THROWS_AS(validate_spec(CorpusSpec{0, 1, 4}), InvalidInput);
}

TEST_CASE("hashing") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(digest64("abc") == 0xba7816bf8f01cfeaULL);
  CHECK(instance_id(fixtures::fix_ex()).size() == 16);
}

TEST_CASE("random topologies") {
  const auto sig = SpaceSignature::numbered(3, 2);
  CHECK(random_topology(sig, 5, 0.0).is_indiscrete());
  CHECK(random_topology(sig, 5, 1.0).is_discrete());
  CHECK(random_topology(sig, 11, 0.3) == random_topology(sig, 11, 0.3));
  CHECK_THROWS_AS(random_topology(sig, 1, 1.5), InvalidInput);

  CorpusSpec spec;
  spec.mode = CorpusMode::random;
  spec.max_n = 3;
  spec.max_m = 2;
  spec.max_bits = 6;
  spec.count = 50;
  spec.seed = 42;
  const Corpus a = generate_corpus(spec, 1);
  const Corpus b = generate_corpus(spec, 3);
  REQUIRE(a.instances.size() == 50);
  CHECK(fingerprint(a.instances) == fingerprint(b.instances));
  for (std::size_t i = 0; i < 50; ++i) CHECK(a.instances[i] == b.instances[i]);
}

TEST_CASE("corpus round trip") {
  const auto dir = scratch("corpus");
  Corpus c = generate_corpus(CorpusSpec{2, 2, 3});
  export_corpus(c, dir);
  const Corpus back = import_corpus(dir);
  CHECK(fingerprint(back.instances) == fingerprint(c.instances));
  REQUIRE(back.spec.has_value());
  CHECK(*back.spec == *c.spec);

  // Empty corpora are valid.
  const auto empty = scratch("empty");
  export_corpus(Corpus{}, empty);
  CHECK(import_corpus(empty).instances.empty());

  // Tampering with the manifest is detected.
  auto manifest = io::read_file(dir / "manifest.json");
  const auto pos = manifest.find("\"fingerprint\": \"") + 16;
  manifest[pos] = manifest[pos] == '0' ? '1' : '0';
  io::write_file(dir / "manifest.json", manifest);
  CHECK_THROWS_AS(import_corpus(dir), InvalidInput);

  io::write_file(dir / "manifest.json", "{not json");
  CHECK_THROWS_AS(import_corpus(dir), InvalidInput);
  fs::remove(dir / "manifest.json");
  CHECK_THROWS_AS(import_corpus(dir), InvalidInput);
}

TEST_CASE("claim registry") {
  const auto reg = claim_registry();
  std::set<std::string_view> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.scope.empty());
  }
  for (const char* id : {"T2.11.ix", "T2.11.x", "R3.2.b", "T5.3", "T5.4", "T6.3", "T6.6",
                         "T6.8", "R6.11", "T6.12", "T6.17", "T6.18", "T6.19", "T4.6",
                         "T4.7"}) {
    CAPTURE(id);
    CHECK(find_claim(id).tier == Tier::under_test);
  }
  CHECK(find_claim("T2.11.xii").tier == Tier::asserted);
  CHECK_THROWS_AS(find_claim("T9.9"), InvalidInput);
  CHECK_FALSE(adopted_semantics().empty());
}

TEST_CASE("suite over the fixture reproduces the converse witnesses") {
  const std::vector<SoftTopology> corpus = {fixtures::fix_ex()};
  SuiteOptions opt;
  opt.claims = {"R2.3", "R2.3.conv.so", "R2.3.conv.sc", "E2.2"};
  const auto report = run_claim_suite(corpus, opt);
  REQUIRE(report.records.size() == 4);
  CHECK(report.records[0].claim->id == "E2.2");
  CHECK(report.records[0].status == ClaimStatus::holds);
  CHECK(report.records[1].status == ClaimStatus::holds);
  const auto& so = report.records[2];
  CHECK(so.status == ClaimStatus::refuted);
  REQUIRE(so.witness.has_value());
  CHECK(so.witness->sets.at(0).second.bits() == kSemiopenG);
  const auto& sc = report.records[3];
  REQUIRE(sc.witness.has_value());
  CHECK(sc.witness->sets.at(0).second.bits() == kSemiclosedK);
  CHECK(report.asserted_failures() == 0);
  CHECK(report.coverage_complete());

  SuiteOptions bad;
  bad.claims = {"nope"};
  CHECK_THROWS_AS(run_claim_suite(corpus, bad), InvalidInput);
}

TEST_CASE("vacuous hypotheses are reported as exhausted") {
  const std::vector<SoftTopology> corpus = {fixtures::fix_ind()};
  SuiteOptions opt;
  opt.claims = {"E6.2"};
  const auto report = run_claim_suite(corpus, opt);
  CHECK(report.records[0].status == ClaimStatus::exhausted);
  CHECK(report.records[0].hypothesis_instances == 0);
  CHECK(report.records[0].instances == 1);
}

TEST_CASE("witness bundles replay") {
  const std::vector<SoftTopology> corpus = generate_corpus(CorpusSpec{3, 1, 3}).instances;
  SuiteOptions opt;
  opt.tier = Tier::under_test;
  auto report = run_claim_suite(corpus, opt);
  const auto root = scratch("witnesses");
  write_witnesses(report, root);
  std::size_t replayed = 0;
  for (const auto& r : report.records) {
    if (r.status != ClaimStatus::refuted) continue;
    CAPTURE(r.claim->id);
    REQUIRE_FALSE(r.witness_path.empty());
    const auto dir = root / r.witness_path;
    CHECK(fs::exists(dir / "space.json"));
    CHECK(fs::exists(dir / "witness.json"));
    CHECK(fs::exists(dir / "function.json") == r.witness->function.has_value());
    const auto again = replay_witness(dir);
    CHECK(again.status == ClaimStatus::refuted);
    CHECK(again.claim == r.claim);
    ++replayed;
  }
  CHECK(replayed > 0);
  CHECK_THROWS_AS(replay_witness(root / "missing"), InvalidInput);
}
