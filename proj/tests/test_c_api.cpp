#include <cstdlib>
#include <cstring>
#include <string>

#include "doctest.h"
#include "promrep/promrep.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  promrep_string_free(s);
  return out;
}

std::string data(const char* name) { return std::string(PROMREP_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(promrep_version()) > 0);
  CHECK(std::string(promrep_status_name(PROMREP_OK)) == "ok");
  CHECK(std::string(promrep_status_name(PROMREP_E_REFERENCE)) == "unresolved reference");
  CHECK(promrep_law_count() == 22);
}

TEST_CASE("workspace lifecycle and check") {
  promrep_workspace* ws = nullptr;
  REQUIRE(promrep_workspace_from_file(data("chain_prom.json").c_str(), &ws) == PROMREP_OK);
  int holds = -1;
  char* report = nullptr;
  REQUIRE(promrep_check(ws, "p", &holds, &report) == PROMREP_OK);
  CHECK(holds == 1);
  CHECK(take(report).find("order preservation: ok") != std::string::npos);

  CHECK(promrep_check(ws, "missing", &holds, &report) == PROMREP_E_REFERENCE);
  CHECK(std::string(promrep_last_error()).find("missing") != std::string::npos);

  char* text = nullptr;
  REQUIRE(promrep_workspace_to_string(ws, &text) == PROMREP_OK);
  const std::string s1 = take(text);
  promrep_workspace* again = nullptr;
  REQUIRE(promrep_workspace_from_string(s1.c_str(), &again) == PROMREP_OK);
  REQUIRE(promrep_workspace_to_string(again, &text) == PROMREP_OK);
  CHECK(take(text) == s1);
  promrep_workspace_free(again);

  promrep_workspace* out = nullptr;
  REQUIRE(promrep_apply(ws, "unit", "p", nullptr, 0, &out) == PROMREP_OK);
  REQUIRE(promrep_check(out, "unit(p)", &holds, &report) == PROMREP_OK);
  CHECK(holds == 1);
  take(report);
  promrep_workspace_free(out);
  CHECK(promrep_apply(ws, "M", "p", nullptr, 0, &out) == PROMREP_E_KIND);
  CHECK(promrep_apply(ws, "bogus", "p", nullptr, 0, &out) == PROMREP_E_ARGUMENT);
  promrep_workspace_free(ws);
  promrep_workspace_free(nullptr);
}

TEST_CASE("input errors") {
  promrep_workspace* ws = nullptr;
  CHECK(promrep_workspace_from_string("{", &ws) == PROMREP_E_PARSE);
  CHECK(ws == nullptr);
  CHECK(promrep_workspace_from_file(data("dangling.json").c_str(), &ws) == PROMREP_E_REFERENCE);
  CHECK(promrep_workspace_from_file(data("no_such_file.json").c_str(), &ws) != PROMREP_OK);
  CHECK(promrep_workspace_from_string(nullptr, &ws) == PROMREP_E_ARGUMENT);

  REQUIRE(promrep_workspace_from_file(data("bad_preorder.json").c_str(), &ws) == PROMREP_OK);
  int holds = -1;
  char* report = nullptr;
  REQUIRE(promrep_check(ws, "q", &holds, &report) == PROMREP_OK);
  CHECK(holds == 0);
  CHECK(take(report).find("violated (a1,a1)") != std::string::npos);
  promrep_workspace_free(ws);
}

TEST_CASE("verify") {
  promrep_verify_options opts;
  promrep_verify_options_init(&opts);
  CHECK(opts.trials == 500);
  opts.law = "lemma7";
  opts.exhaustive = 1;
  const size_t sizes[] = {2, 3};
  opts.max_size = sizes;
  opts.max_size_count = 2;
  int holds = -1;
  char* summary = nullptr;
  char* witness = nullptr;
  uint64_t ms = 0;
  REQUIRE(promrep_verify(&opts, &holds, &summary, &witness, &ms) == PROMREP_OK);
  CHECK(holds == 1);
  CHECK(witness == nullptr);
  CHECK(take(summary).find("64 relations checked") != std::string::npos);

  opts.law = "eq1-galois";
  const size_t three[] = {3};
  opts.max_size = three;
  opts.max_size_count = 1;
  CHECK(promrep_verify(&opts, &holds, &summary, &witness, nullptr) == PROMREP_E_BOUNDS);
  opts.law = "nope";
  CHECK(promrep_verify(&opts, &holds, &summary, &witness, nullptr) == PROMREP_E_ARGUMENT);

  promrep_verify_options_init(&opts);
  opts.law = "lemma1";
  opts.seed = 3;
  opts.trials = 400;
  REQUIRE(promrep_verify(&opts, &holds, &summary, &witness, nullptr) == PROMREP_OK);
  const std::string one = take(summary);
  opts.jobs = 8;
  REQUIRE(promrep_verify(&opts, &holds, &summary, &witness, nullptr) == PROMREP_OK);
  CHECK(take(summary) == one);
}

TEST_CASE("laws listing and replay") {
  char* listing = nullptr;
  REQUIRE(promrep_laws(&listing) == PROMREP_OK);
  const std::string l = take(listing);
  CHECK(l.find("lemma9: ΨT(φ,ψ) = (φ,ψ)") != std::string::npos);
  CHECK(l.find("eq1-galois: ") != std::string::npos);

  int reproduced = -1;
  CHECK(promrep_replay_witness("not json", 0, &reproduced) == PROMREP_E_PARSE);
  const char* planted = R"({"law": "lemma7", "seed": "exhaustive", "index": 0,
    "violation": {"axiom": "planted", "pairs": []},
    "structures": {"sets": {"A": ["a0"], "B": ["b0"]},
                   "relations": {"x": {"from": "A", "to": "B", "pairs": [["a0","b0"]]}}}})";
  REQUIRE(promrep_replay_witness(planted, 0, &reproduced) == PROMREP_OK);
  CHECK(reproduced == 0);
}
