#include <algorithm>
#include <set>

#include "doctest.h"
#include "pseudomod/scenario.hpp"
#include "pseudomod/serialize.hpp"

using namespace pseudomod;

namespace {

std::string scenario_path(const std::string& name) { return std::string(PSEUDOMOD_SCENARIO_DIR) + "/" + name + ".json"; }

json minimal() {
  return json::parse(R"({
    "schema": "pseudomod.scenario/1", "name": "mini",
    "rings": {"A": {"kind": "field", "p": 5}},
    "groups": {"G": {"kind": "cyclic", "n": 4}},
    "characters": {"k": {"ring": "A", "group": "G", "values": [2]}},
    "representations": {"rho": {"kind": "matrix", "ring": "A", "group": "G", "images": [[2, 0, 0, 3]]}},
    "pipelines": [{"rep": "rho", "kappa": "k"}]
  })");
}

std::string input_error(const json& j) {
  try {
    parse_scenario(j);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fnv1a reference vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("rings survive a json round trip") {
  std::vector<FiniteRing> rings{zmod_ring(5, 3), quadratic_field(7), DvrModel(prime_field(3), 4).ring(),
                                quotient_ring(zmod_ring(5, 2), ideal_closure(zmod_ring(5, 2), {{5}}))};
  for (const auto& r : rings) {
    json j = ring_to_json(r);
    CHECK(j["schema"] == "pseudomod.ring/1");
    FiniteRing back = ring_from_json(j);
    CHECK(back.dim() == r.dim());
    CHECK(back.log_size() == r.log_size());
    CHECK(back.relations() == r.relations());
    for (int i = 0; i < r.dim(); ++i)
      for (int k = 0; k < r.dim(); ++k) CHECK(back.table_entry(i, k) == r.table_entry(i, k));
    CHECK(ring_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("malformed ring literals name the offending field") {
  json j = ring_to_json(zmod_ring(5, 1));
  j["char"] = 6;
  CHECK_THROWS_WITH_AS(ring_from_json(j, "rings.A"), doctest::Contains("rings.A"), InputError);
  json k = ring_to_json(DvrModel(prime_field(5), 2).ring());
  k["mul"][0][1] = json::array({0, 0});  // 1 * t = 0: "one" is no longer an identity
  CHECK_THROWS_AS(ring_from_json(k), InputError);
  CHECK_THROWS_AS(ring_from_spec(json::parse(R"({"kind": "field", "p": 4})"), "rings.A"), InputError);
  CHECK_THROWS_AS(ring_from_spec(json::parse(R"({"kind": "torus"})"), "rings.A"), InputError);
}

TEST_CASE("groups survive a json round trip") {
  for (const char* lit : {R"({"kind": "cyclic", "n": 6})", R"({"kind": "dihedral", "n": 4})", R"({"kind": "s3"})",
                          R"({"kind": "quaternion"})", R"({"kind": "permutation", "generators": [[1, 2, 0], [1, 0, 2]]})"}) {
    FiniteGroup g = group_from_json(json::parse(lit));
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back.table() == g.table());
    CHECK(back.generators() == g.generators());
  }
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"kind": "cyclic", "n": 100})")), InputError);
}

TEST_CASE("scenario parsing resolves names and rejects bad references") {
  Scenario s = parse_scenario(minimal());
  CHECK(s.name == "mini");
  CHECK(s.reps.size() == 1);
  CHECK(s.pipelines.size() == 1);
  CHECK(s.pipelines[0].stages == pipeline_stages());

  json j = minimal();
  j["pipelines"][0]["kappa"] = "missing";
  CHECK(input_error(j).find("pipelines") != std::string::npos);

  j = minimal();
  j["representations"]["rho"]["ring"] = "B";
  CHECK_FALSE(input_error(j).empty());

  j = minimal();
  j["budget"] = 0;
  CHECK(input_error(j).find("budget") != std::string::npos);

  j = minimal();
  j["schema"] = "pseudomod.scenario/2";
  CHECK(input_error(j).find("schema") != std::string::npos);

  j = minimal();
  j["characters"]["k"]["values"] = json::array({3, 1});
  CHECK_FALSE(input_error(j).empty());

  j = minimal();
  j["representations"]["rho"]["images"] = json::array({json::array({2, 0, 0, 2})});  // 2^4 = 1: fine
  CHECK(input_error(j).empty());
  j["groups"]["G"]["n"] = 3;  // now the image has the wrong order
  CHECK_FALSE(input_error(j).empty());

  j = minimal();
  j["pipelines"][0]["stages"] = json::array({"validate", "teleport"});
  CHECK(input_error(j).find("teleport") != std::string::npos);

  CHECK_THROWS_AS(load_scenario(scenario_path("does-not-exist")), InputError);
}

TEST_CASE("bundled scenarios") {
  auto diag = run_scenario(load_scenario(scenario_path("diag-ordinary")));
  CHECK(diag.exit_code() == 0);
  CHECK(diag.doc["schema"] == "pseudomod.report/1");
  CHECK(diag.doc["status"] == "ok");
  CHECK(diag.doc["pipelines"][0]["ordinary"]["is_ordinary"] == true);
  CHECK(diag.doc["pipelines"][0]["reducibility"]["zero_ideal"] == true);

  auto s3 = run_scenario(load_scenario(scenario_path("s3-irreducible")));
  CHECK(s3.exit_code() == 0);
  CHECK(s3.doc["pipelines"][0]["reducibility"]["unit_ideal"] == true);
  CHECK(s3.doc["pipelines"][0]["ordinary"]["zero_ring"] == true);

  auto plane = run_scenario(load_scenario(scenario_path("plane-tower-r2")));
  CHECK(plane.exit_code() == 0);
  const auto& tower = plane.doc["towers"][0];
  for (const char* c : {"2", "3", "4", "6"}) CHECK(tower["conditions"][c] == "true");
  CHECK(tower["length_h_mod_I"] == 2);
  CHECK(plane.doc["lenstra"][0]["criterion_met"] == true);
  CHECK(plane.doc["lenstra"][0]["is_isomorphism"] == true);
  CHECK(render_text(plane.doc).find("plane-tower-r2") != std::string::npos);
}

TEST_CASE("reports are deterministic and budgets are enforced") {
  Scenario s = load_scenario(scenario_path("diag-ordinary"));
  CHECK(run_scenario(s).doc.dump() == run_scenario(s).doc.dump());
  RunOptions tight;
  tight.budget = 1;
  CHECK_THROWS_AS(run_scenario(s, tight), BudgetExceeded);
}

TEST_CASE("invalid laws are invariant failures") {
  json j = minimal();
  j["representations"]["bad"] = json::parse(R"({"kind": "law", "ring": "A", "group": "G",
                                                "trace": [2, 1, 0, 1], "det": [1, 1, 1, 1]})");
  j["pipelines"] = json::array();
  RunOptions opt;
  opt.mode = RunMode::Validate;
  auto rep = run_scenario(parse_scenario(j), opt);
  CHECK(rep.exit_code() == 1);
  CHECK(rep.doc["status"] != "ok");
}

TEST_CASE("corpus generation") {
  Corpus c0 = generate_corpus(0, {});
  CHECK(c0.entries.size() == 20);
  CHECK(c0.manifest["schema"] == "pseudomod.manifest/1");
  CHECK(c0.manifest["checksum"] == "76055b2b240edd6c");
  CHECK(generate_corpus(0, {}).manifest.dump() == c0.manifest.dump());
  CHECK(std::is_sorted(c0.entries.begin(), c0.entries.end(),
                       [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; }));
  for (const auto& e : c0.entries) CHECK_NOTHROW(parse_scenario(e.scenario));

  Corpus empty = generate_corpus(0, {0, 0});
  CHECK(empty.entries.empty());
  CHECK(empty.manifest["entries"].empty());

  Corpus c1 = generate_corpus(1, {});
  std::set<std::string> names;
  for (const auto& e : c0.entries) names.insert(e.name);
  for (const auto& e : c1.entries) CHECK(names.count(e.name) == 0);
}
