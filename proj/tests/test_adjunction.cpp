#include "doctest.h"
#include "support.hpp"

using namespace promrep;
using namespace support;
namespace o = support::oracle;

TEST_CASE("unit maps b to its down-set") {
  auto A = set("A", "a", 1), B = set("B", "b", 2);
  Prom discrete{A, B, identity(A), identity(B), fn(A, B, {0})};
  PromMorphism u = unit(discrete);
  CHECK(u.phi == FnMap::identity(A));
  CHECK(u.psi == singleton_map(*powerset(B)));
  CHECK(check_prom_morphism(u).ok());

  Prom chain{A, B, identity(A), chain2(B), fn(A, B, {0})};
  PromMorphism uc = unit(chain);
  CHECK(uc.psi.dst().label(uc.psi(0)) == "{b0}");
  CHECK(uc.psi.dst().label(uc.psi(1)) == "{b0,b1}");
  CHECK(check_prom_morphism(uc).ok());
  CHECK(same_prom(uc.dst, M_obj(R_obj(chain))));
}

TEST_CASE("counit is membership") {
  auto M = set("M", "m", 1), S = set("S", "s", 1);
  Representation r{M, S, rel(M, S, {{0, 0}}), identity(S)};
  RepMorphism c = counit(r);
  CHECK(c.phi == FnMap::identity(S));
  CHECK(eq(c.tau, powerset(M)->mem));
  CHECK(check_rep_morphism(c).ok());
  // source satisfaction ∈\⊨ holds for both {} and {m0}
  const Rel& src_sat = c.src.sat;
  CHECK(src_sat.test(0, 0));
  CHECK(src_sat.test(1, 0));

  Representation e{M, S, Rel(M, S), identity(S)};
  RepMorphism ce = counit(e);
  // ∈\∅ only keeps the empty subset
  CHECK(labels(ce.src.sat) == std::vector<std::pair<std::string, std::string>>{{"{}", "s0"}});
  CHECK(eq(compose(ce.tau, ce.src.sat), compose(e.sat, graph_upper(ce.phi))));
  CHECK(check_rep_morphism(ce).ok());

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CHECK(check_rep_morphism(counit(gen_representation(seed, seed % 4, (seed / 4) % 4))).ok());
  }
}

TEST_CASE("x is recovered from membership") {
  auto A = set("A", "a", 2), B = set("B", "b", 3);
  CHECK(eq(mem_residual_recover(Rel(A, B)), Rel(A, B)));
  CHECK(eq(mem_residual_recover(Rel::full(A, B)), Rel::full(A, B)));
  std::size_t n = 0;
  for (const auto& x : o::all(2, 3)) {
    Rel r = o::to_rel(A, B, x);
    CHECK(eq(mem_residual_recover(r), r));
    ++n;
  }
  CHECK(n == 64);
}

TEST_CASE("triangle in representations") {
  auto A = set("A", "a", 2), B = set("B", "b", 2);
  Prom discrete{A, B, identity(A), identity(B), fn(A, B, {0, 1})};
  TriangleRepr d = triangle_repr(discrete);
  CHECK(d.equals_y);
  CHECK(d.above_identity);
  CHECK_FALSE(d.strict);
  CHECK(same_rep_morphism(d.composite, identity_rep_morphism(R_obj(discrete))));

  Prom chain{A, B, identity(A), chain2(B), fn(A, B, {0, 1})};
  TriangleRepr c = triangle_repr(chain);
  CHECK(c.equals_y);
  CHECK(c.above_identity);
  CHECK(c.strict);
  CHECK(eq(c.composite.tau, chain2(B)));

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    TriangleRepr t = triangle_repr(gen_prom(seed, 3, 3));
    CHECK(t.equals_y);
    CHECK(t.above_identity);
  }
}

TEST_CASE("triangle in proms") {
  for (std::size_t m = 0; m <= 3; ++m)
    for (const auto& r : all_representations(set("M", "m", m), set("S", "s", 1))) {
      FnMap t = triangle_pom_map(r);
      CHECK(t == FnMap::identity(powerset(r.M)->carrier));
      CHECK(triangle_pom(r));
    }
  auto M = set("M", "m", 2), S = set("S", "s", 2);
  CHECK(triangle_pom(Representation{M, S, Rel(M, S), chain2(S)}));
  // with 2^(2^M) small enough the composite can also be built directly
  auto M1 = set("M", "m", 1);
  Representation r{M1, S, rel(M1, S, {{0, 1}}), chain2(S)};
  PromMorphism composite = compose_prom_morphisms(M_mor(counit(r)), unit(M_obj(r)));
  CHECK(same_prom_morphism(composite, identity_prom_morphism(M_obj(r))));
}

TEST_CASE("psi and tee") {
  auto M = set("M", "m", 1), B = set("B", "b", 2);
  auto pw = powerset(M);
  Rel tau = rel(M, B, {{0, 0}});
  FnMap d = psi(tau, identity(B));
  CHECK(pw->carrier.label(d(0)) == "{m0}");
  CHECK(pw->carrier.label(d(1)) == "{}");
  FnMap z = psi(Rel(M, B), chain2(B));
  CHECK(z(0) == 0);
  CHECK(z(1) == 0);
  FnMap c = psi(tau, chain2(B));
  CHECK(pw->carrier.label(c(0)) == "{m0}");
  CHECK(pw->carrier.label(c(1)) == "{m0}");

  CHECK(tee(M, z).count() == 0);
  auto B2 = set("B", "b", 2);
  auto pwb = powerset(B2);
  CHECK(eq(tee(B2, singleton_map(*pwb)), identity(B2)));

  for (const auto& t : o::all(1, 2)) {
    Rel tr = o::to_rel(M, B, t);
    for (const auto& y : all_preorders(B)) {
      FnMap ps = psi(tr, y);
      CHECK(eq(compose(pw->mem, graph_upper(ps)), compose(tr, y)));
      CHECK(eq(tee(M, ps), compose(tr, y)));
    }
  }
}

TEST_CASE("galois lift and lower") {
  auto A = set("A", "a", 1), B = set("B", "b", 2);
  Prom p{A, B, identity(A), chain2(B), fn(A, B, {0})};
  auto M = set("M", "m", 1), S = set("S", "s", 1);
  Representation r{M, S, rel(M, S, {{0, 0}}), identity(S)};

  // τ = {(m0,b0)} is a morphism R(p) → r but not y-saturated
  RepMorphism m{R_obj(p), r, fn(A, S, {0}), rel(M, B, {{0, 0}})};
  REQUIRE(check_rep_morphism(m).ok());
  PromMorphism lifted = galois_lift(p, r, m);
  CHECK(check_prom_morphism(lifted).ok());
  CHECK(lifted.phi == m.phi);
  RepMorphism back = galois_lower(p, r, lifted);
  CHECK(check_rep_morphism(back).ok());
  CHECK(back.phi == m.phi);
  CHECK(repmor_leq(m, back));
  CHECK(eq(back.tau, compose(m.tau, p.y)));
  CHECK(labels(back.tau) ==
        std::vector<std::pair<std::string, std::string>>{{"m0", "b0"}, {"m0", "b1"}});
  CHECK(same_prom_morphism(galois_lift(p, r, back), lifted));

  for (const auto& n : enumerate_prom_morphisms(p, M_obj(r))) {
    CHECK(same_prom_morphism(galois_lift(p, r, galois_lower(p, r, n)), n));
  }

  Representation wrong{M, S, Rel(M, S), identity(S)};
  CHECK_THROWS_AS((void)galois_lift(p, wrong, m), Error);
}
