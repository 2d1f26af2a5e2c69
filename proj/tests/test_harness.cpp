#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace promrep;
using namespace support;

TEST_CASE("child seeds do not depend on order of evaluation") {
  CHECK(child_seed(7, 3) == child_seed(7, 3));
  CHECK(child_seed(7, 3) != child_seed(7, 4));
  CHECK(child_seed(7, 3) != child_seed(8, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(child_seed(0, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("generators produce valid structures") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t a = seed % 5, b = (seed / 5) % 5;
    CHECK(is_preorder(gen_preorder(seed, a).rel));
    CHECK(check_prom(gen_prom(seed, b == 0 ? 0 : a, b)).ok());
    CHECK(check_representation(gen_representation(seed, a, b)).ok());
  }
  CHECK(gen_preorder(3, 0).rel.src().size() == 0);
}

TEST_CASE("generators are deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(same_prom(gen_prom(seed, 3, 3), gen_prom(seed, 3, 3)));
    CHECK(same_representation(gen_representation(seed, 3, 2), gen_representation(seed, 3, 2)));
    CHECK(same_prom_morphism(gen_prom_morphism(seed, {3, 3}), gen_prom_morphism(seed, {3, 3})));
  }
  std::size_t distinct = 0;
  for (std::uint64_t seed = 1; seed < 50; ++seed)
    distinct += same_prom(gen_prom(0, 3, 3), gen_prom(seed, 3, 3)) ? 0 : 1;
  CHECK(distinct > 0);
}

TEST_CASE("enumerations have the expected sizes") {
  CHECK(all_relations(set("A", "a", 2), set("B", "b", 2)).size() == 16);
  CHECK(all_maps(set("A", "a", 2), set("B", "b", 3)).size() == 9);
  CHECK(all_maps(set("A", "a", 0), set("B", "b", 0)).size() == 1);
  CHECK(all_maps(set("A", "a", 1), set("B", "b", 0)).empty());
  CHECK(preorder_count(0) == 1);
  CHECK(preorder_count(4) == 355);
  std::size_t proms = 0;
  for (const auto& p : all_proms(set("A", "a", 2), set("B", "b", 2))) {
    CHECK(check_prom(p).ok());
    ++proms;
  }
  CHECK(proms > 0);
  for (const auto& r : all_representations(set("M", "m", 2), set("S", "s", 2)))
    CHECK(check_representation(r).ok());
  CHECK_THROWS_AS((void)all_relations(set("A", "a", 5), set("B", "b", 4)), Error);
}

TEST_CASE("law catalog") {
  const auto& cat = law_catalog();
  CHECK(cat.size() == 22);
  std::set<std::string> names;
  for (const auto& info : cat) {
    names.insert(info.name);
    CHECK(parse_law(info.name) == info.id);
    CHECK(&law_runner(info.id).info() == &law_runner(info.id).info());
    CHECK(law_runner(info.id).info().name == info.name);
    CHECK(info.dims.size() == info.default_exhaustive.size());
    CHECK(info.dims.size() == info.default_seeded.size());
  }
  CHECK(names.size() == 22);
  CHECK(names.count("eq1-galois") == 1);
  CHECK(law_info(LawId::Lemma9).citation.rfind("ΨT(φ,ψ) = (φ,ψ)", 0) == 0);
  CHECK_FALSE(parse_law("lemma12").has_value());
}

TEST_CASE("exhaustive counts") {
  SearchConfig c;
  c.law = LawId::Eq1Galois;
  c.mode = SearchMode::Exhaustive;
  c.max_size = {2, 2, 2};
  SearchSummary s = search(c);
  CHECK(s.holds());
  CHECK(s.shapes.at("2x2x2").count == 4096);
  CHECK(s.tag("related") + s.tag("unrelated") == s.checked);

  c.law = LawId::Lemma7;
  c.max_size = {2, 3};
  s = search(c);
  CHECK(s.shapes.at("2x3").count == 64);
  CHECK(s.to_text().find("shape 2x3: 64 relations checked") != std::string::npos);
}

TEST_CASE("bounds and config errors") {
  SearchConfig c;
  c.law = LawId::Eq1Galois;
  c.mode = SearchMode::Exhaustive;
  c.max_size = {3};
  try {
    (void)search(c);
    FAIL("expected BoundsExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundsExceeded);
  }
  CHECK(exhaustive_estimate(LawId::Eq1Galois, {3, 3, 3}) > kMaxExhaustiveInstances);
  CHECK(exhaustive_estimate(LawId::Eq1Galois, {2, 2, 2}) <= kMaxExhaustiveInstances);
  c.max_size = {2, 2};
  CHECK_THROWS_AS((void)search(c), Error);
}

TEST_CASE("summaries do not depend on the number of jobs") {
  for (LawId law : {LawId::Lemma1, LawId::TriangleRepr, LawId::Lemma9}) {
    SearchConfig c;
    c.law = law;
    c.trials = 1500;
    c.seed = 42;
    c.parallelism = 1;
    const std::string one = search(c).to_text();
    c.parallelism = 8;
    CHECK(search(c).to_text() == one);
    c.mode = SearchMode::Exhaustive;
    c.max_size = {1};
    const std::string e8 = search(c).to_text();
    c.parallelism = 1;
    CHECK(search(c).to_text() == e8);
  }
}

namespace {

LawDefinition<std::uint64_t> counting_law(std::set<std::uint64_t> bad) {
  LawDefinition<std::uint64_t> def;
  def.info = law_info(LawId::Eq1Galois);
  def.estimate = [](const Sizes&) { return std::uint64_t{3000}; };
  def.enumerate = [](const Sizes&, std::size_t,
                     const std::function<bool(const std::uint64_t&, const std::string&)>& visit) {
    for (std::uint64_t i = 0; i < 3000; ++i)
      if (!visit(i, i < 1000 ? "small" : "large")) return;
  };
  def.generate = [](Rng& rng, const Sizes&) { return rng.next() % 3000; };
  def.shape = [](const std::uint64_t&) { return std::string("any"); };
  def.check = [bad](const std::uint64_t& i, std::size_t) {
    LawOutcome out;
    if (bad.count(i)) out.violation = Violation{"planted", {{std::to_string(i), "x"}}};
    out.tags.push_back(i % 2 ? "odd" : "even");
    return out;
  };
  def.to_workspace = [](const std::uint64_t&) { return Workspace{}; };
  def.from_workspace = [](const Workspace&) { return std::uint64_t{0}; };
  return def;
}

}  // namespace

TEST_CASE("the engine reports the first failing instance in index order") {
  auto runner = make_runner(counting_law({1500, 2500, 2999}));
  SearchConfig c;
  c.mode = SearchMode::Exhaustive;
  for (unsigned jobs : {1U, 3U, 8U}) {
    c.parallelism = jobs;
    SearchSummary s = runner->run(c, {1});
    REQUIRE_FALSE(s.holds());
    CHECK(s.witness->index == 1500);
    CHECK(s.witness->violation.pairs.front().first == "1500");
    CHECK(s.checked == 1501);
    CHECK(s.shapes.at("small").count == 1000);
    CHECK(s.tag("even") == 751);
  }
  auto clean = make_runner(counting_law({}));
  SearchSummary all = clean->run(c, {1});
  CHECK(all.holds());
  CHECK(all.checked == 3000);
  CHECK(all.to_text().find("result: holds") != std::string::npos);
}

TEST_CASE("seeded witnesses carry their trial index") {
  std::set<std::uint64_t> bad;
  for (std::uint64_t i = 0; i < 3000; i += 7) bad.insert(i);
  auto runner = make_runner(counting_law(bad));
  SearchConfig c;
  c.trials = 200;
  c.seed = 9;
  SearchSummary s = runner->run(c, {1});
  REQUIRE_FALSE(s.holds());
  Rng rng(child_seed(9, s.witness->index));
  CHECK(bad.count(rng.next() % 3000) == 1);
  CHECK(*s.witness->seed == 9);
  CHECK(s.to_text().find("result: refuted") != std::string::npos);
  CHECK(s.to_text().find("violation: planted (") != std::string::npos);
}

TEST_CASE("witness JSON round trip and replay") {
  Workspace ws;
  auto A = set("A", "a", 1);
  ws.add_relation("x", identity(A));
  ws.add_relation("y", identity(A));
  ws.add_relation("z", identity(A));
  Witness w{LawId::Eq1Galois, std::uint64_t{5}, 12, ws, Violation{"planted", {{"a0", "a0"}}}};
  const std::string json = w.to_json();
  Witness back = Witness::from_json(json);
  CHECK(back.law == LawId::Eq1Galois);
  CHECK(back.seed == std::uint64_t{5});
  CHECK(back.index == 12);
  CHECK(back.violation.axiom == "planted");
  CHECK(back.structures.serialize() == ws.serialize());
  CHECK(back.to_json() == json);
  // the law holds on this instance, so the planted violation does not replay
  CHECK_FALSE(replay(back));
  CHECK_FALSE(check_law(LawId::Eq1Galois, ws).has_value());
  CHECK_THROWS_AS((void)Witness::from_json("{}"), Error);
}

TEST_CASE("laws reject invalid instances") {
  Workspace ws;
  auto A = set("A", "a", 2), B = set("B", "b", 2);
  ws.add_prom("p", Prom{A, B, rel(A, A, {{0, 1}}), identity(B), fn(A, B, {0, 1})});
  try {
    (void)check_law(LawId::Lemma1, ws);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  Workspace good;
  good.add_prom("p", Prom{A, B, identity(A), chain2(B), fn(A, B, {0, 1})});
  CHECK_FALSE(check_law(LawId::Lemma1, good).has_value());
  CHECK_FALSE(check_law(LawId::TriangleRepr, good).has_value());
  CHECK_THROWS_AS((void)check_law(LawId::Lemma4, good), Error);
}
