// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "promrep/harness.hpp"

using namespace promrep;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SearchSummary run(LawId law, SearchMode mode, Sizes sizes = {}, std::uint64_t trials = 500,
                  std::uint64_t seed = 1, unsigned jobs = 1) {
  SearchConfig c;
  c.law = law;
  c.mode = mode;
  c.max_size = std::move(sizes);
  c.trials = trials;
  c.seed = seed;
  c.parallelism = jobs;
  return search(c);
}

void holds(Result& r, const SearchSummary& s) {
  const std::string name = law_info(s.law).name;
  r.require(s.holds(), name + " refuted: " + (s.witness ? s.witness->violation.axiom : ""));
  r.require(s.checked > 0, name + " checked nothing");
}

void within(Result& r, Clock::time_point t0, double limit) {
  const double t = seconds_since(t0);
  r.require(t < limit, "took " + std::to_string(t) + " s, limit " + std::to_string(limit) + " s");
}

FinSet carrier(const char* name, const char* prefix, std::size_t n) {
  return FinSet::indexed(name, prefix, n);
}

Result galois_eq() {
  Result r;
  const auto t0 = Clock::now();
  SearchSummary s = run(LawId::Eq1Galois, SearchMode::Exhaustive, {2, 2, 2});
  within(r, t0, 1.0);
  holds(r, s);
  auto it = s.shapes.find("2x2x2");
  r.require(it != s.shapes.end() && it->second.count == 4096, "expected 4096 triples at 2x2x2");
  holds(r, run(LawId::DualGalois, SearchMode::Exhaustive, {2, 2, 2}));
  return r;
}

Result modular() {
  Result r;
  const auto t0 = Clock::now();
  SearchSummary s = run(LawId::ModularTautology, SearchMode::Exhaustive, {2});
  within(r, t0, 5.0);
  holds(r, s);
  return r;
}

Result preorders() {
  Result r;
  const FinSet A = carrier("A", "a", 2);
  std::size_t found = 0, total = 0;
  for (const Rel& x : all_relations(A, A)) {
    ++total;
    const bool pre = is_preorder(x);
    r.require(pre == eq(x, left_residual(x, x)), "is_preorder disagrees with r = r\\r");
    found += pre ? 1 : 0;
  }
  r.require(total == 16, "expected 16 relations");
  r.require(found == 4, "expected 4 preorders, found " + std::to_string(found));
  for (std::size_t m = 0; m <= 3; ++m) {
    auto pw = powerset(carrier("M", "m", m));
    r.require(eq(left_residual(pw->mem, pw->mem), subset_order(*pw)),
              "∈\\∈ differs from ⊆ at |M| = " + std::to_string(m));
  }
  holds(r, run(LawId::PreorderSingleAxiom, SearchMode::Exhaustive, {2, 2}));
  holds(r, run(LawId::MemResidualSubset, SearchMode::Exhaustive, {3}));
  return r;
}

Result r_validity() {
  Result r;
  const auto t0 = Clock::now();
  holds(r, run(LawId::Lemma1, SearchMode::Seeded, {4, 4}, 1000));
  holds(r, run(LawId::Lemma2, SearchMode::Seeded, {4, 4}, 1000));
  within(r, t0, 10.0);
  return r;
}

Result r_lax() {
  Result r;
  SearchSummary s = run(LawId::Lemma3, SearchMode::Seeded, {}, 500);
  holds(r, s);
  r.require(s.checked == 500, "expected 500 instances");
  const FinSet A = carrier("A", "a", 1), B = carrier("B", "b", 2);
  const std::vector<std::pair<std::size_t, std::size_t>> order{{0, 0}, {0, 1}, {1, 1}};
  const Rel chain = Rel::from_pairs(B, B, order);
  const Prom p = make_prom(A, B, identity(A), chain, FnMap(A, B, {0}));
  const RepMorphism rid = R_mor(identity_prom_morphism(p));
  const RepMorphism id = identity_rep_morphism(R_obj(p));
  r.require(repmor_leq(id, rid), "(id,1_B) ⩽ R(id) fails");
  r.require(!eq(rid.tau, id.tau), "R(id) equals the identity on a 2-chain");
  r.require(eq(rid.tau, chain), "R(id) is not (id,y)");
  return r;
}

Result m_strict() {
  Result r;
  const auto t0 = Clock::now();
  holds(r, run(LawId::Lemma4, SearchMode::Exhaustive, {2, 2}));
  holds(r, run(LawId::Lemma5, SearchMode::Exhaustive, {2, 2}));
  holds(r, run(LawId::Lemma6, SearchMode::Exhaustive, {2, 2}));
  within(r, t0, 30.0);
  return r;
}

Result mem_recovery() {
  Result r;
  SearchSummary s = run(LawId::Lemma7, SearchMode::Exhaustive, {2, 3});
  holds(r, s);
  auto it = s.shapes.find("2x3");
  r.require(it != s.shapes.end() && it->second.count == 64, "expected 64 relations at 2x3");
  return r;
}

Result unit_counit() {
  Result r;
  SearchSummary u = run(LawId::UnitNatural, SearchMode::Seeded, {}, 300);
  SearchSummary c = run(LawId::CounitNatural, SearchMode::Seeded, {}, 300);
  holds(r, u);
  holds(r, c);
  r.require(u.checked == 300 && c.checked == 300, "expected 300 morphisms each");
  holds(r, run(LawId::TrianglePom, SearchMode::Exhaustive, {3, 2}));
  SearchSummary t = run(LawId::TriangleRepr, SearchMode::Seeded, {}, 300, 7);
  holds(r, t);
  r.require(t.tag("strict") > 0, "no strict triangle instance recorded");
  return r;
}

Result galois() {
  Result r;
  holds(r, run(LawId::Lemma8, SearchMode::Exhaustive, {2, 2, 2, 2}));
  SearchSummary s = run(LawId::Lemma9, SearchMode::Exhaustive, {2, 2, 2, 2});
  holds(r, s);
  r.require(s.tag("strict") > 0, "no strict TΨ witness");
  r.require(s.tag("lift-lower") > 0 && s.tag("lower-lift") > 0, "a hom-set side was not visited");
  holds(r, run(LawId::PsiCharacterization, SearchMode::Exhaustive, {2, 2}));
  return r;
}

Result exactness() {
  Result r;
  SearchSummary e = run(LawId::Lemma10, SearchMode::Exhaustive, {2, 2});
  SearchSummary o = run(LawId::Lemma11, SearchMode::Exhaustive, {2, 2});
  holds(r, e);
  holds(r, o);
  r.require(e.tag("exact") > 0 && e.tag("non-exact") > 0, "exact/non-exact coverage");
  r.require(o.tag("order-reflecting") > 0 && o.tag("non-reflecting") > 0,
            "order-reflecting/non-reflecting coverage");
  r.detail = "exact=" + std::to_string(e.tag("exact")) +
             " non-exact=" + std::to_string(e.tag("non-exact")) +
             " order-reflecting=" + std::to_string(o.tag("order-reflecting")) +
             " non-reflecting=" + std::to_string(o.tag("non-reflecting")) +
             (r.ok ? "" : " " + r.detail);
  holds(r, run(LawId::SoundnessResidualEquiv, SearchMode::Exhaustive, {2, 2}));
  return r;
}

Result determinism() {
  Result r;
  for (const auto& info : law_catalog()) {
    const std::string a = run(info.id, SearchMode::Seeded, {}, 300, 2024, 1).to_text();
    const std::string b = run(info.id, SearchMode::Seeded, {}, 300, 2024, 8).to_text();
    r.require(a == b, info.name + " summary differs between 1 and 8 jobs");
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"galois equivalence, exhaustive 2x2x2", galois_eq},
      {"modular tautology, exhaustive", modular},
      {"preorder characterization and ∈\\∈ = ⊆", preorders},
      {"R valid on objects and morphisms, 1000 seeded", r_validity},
      {"R lax with a strict identity witness", r_lax},
      {"M valid and strictly functorial, exhaustive", m_strict},
      {"x = ∈⨾(∈\\x), exhaustive 2,3", mem_recovery},
      {"unit and counit: validity, naturality, triangles", unit_counit},
      {"hom-set Galois connection with a strict witness", galois},
      {"exactness transfer in both directions", exactness},
      {"summaries identical at 1 and 8 jobs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("error: ") + e.what();
    }
    std::printf("%s %2zu %s (%.2f s)%s%s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(t0), r.detail.empty() ? "" : ": ", r.detail.c_str());
    std::fflush(stdout);
    failed += r.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
