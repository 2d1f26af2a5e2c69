#include "doctest.h"
#include "support.hpp"

using namespace promrep;
using namespace support;
namespace o = support::oracle;

namespace {

/// {m' | ∃m ∈ α. (m',m) ∈ τ} computed on bitmasks.
std::uint64_t direct_image(const Rel& tau, std::uint64_t alpha) {
  std::uint64_t out = 0;
  for (std::size_t mp = 0; mp < tau.src().size(); ++mp)
    for (std::size_t m = 0; m < tau.dst().size(); ++m)
      if (((alpha >> m) & 1U) && tau.test(mp, m)) out |= std::uint64_t{1} << mp;
  return out;
}

}  // namespace

TEST_CASE("R on objects") {
  auto A = set("A", "a", 1), B = set("B", "b", 2);
  Prom p{A, B, identity(A), chain2(B), fn(A, B, {0})};
  Representation r = R_obj(p);
  CHECK(r.M == B);
  CHECK(r.S == A);
  // (b,a) ∈ sat iff (b, f(a)) ∈ y
  o::Pairs expected{2, 1, {}};
  for (std::size_t b = 0; b < 2; ++b)
    if (p.y.test(b, p.f(0))) expected.p.insert({b, 0});
  CHECK(o::of(r.sat) == expected);
  CHECK(labels(r.sat) == std::vector<std::pair<std::string, std::string>>{{"b0", "a0"}});
  CHECK(check_representation(r).ok());

  auto A2 = set("A", "a", 2);
  FnMap f = fn(A2, B, {1, 1});
  CHECK(eq(R_obj(Prom{A2, B, identity(A2), identity(B), f}).sat, graph_upper(f)));

  auto A0 = set("A", "a", 0);
  Representation e = R_obj(Prom{A0, B, identity(A0), chain2(B), fn(A0, B, {})});
  CHECK(e.sat.count() == 0);
  CHECK(e.S.size() == 0);
  CHECK(check_representation(e).ok());
}

TEST_CASE("R on morphisms") {
  auto A = set("A", "a", 1), B = set("B", "b", 2);
  Prom p{A, B, identity(A), chain2(B), fn(A, B, {0})};
  RepMorphism rid = R_mor(identity_prom_morphism(p));
  CHECK(eq(rid.tau, p.y));
  CHECK(repmor_leq(identity_rep_morphism(R_obj(p)), rid));
  CHECK_FALSE(eq(rid.tau, identity(B)));

  Prom q{A, B, identity(A), identity(B), fn(A, B, {1})};
  PromMorphism m{p, q, FnMap::identity(A), fn(B, B, {1, 1})};
  REQUIRE(check_prom_morphism(m).ok());
  CHECK(eq(R_mor(m).tau, graph_upper(m.psi)));

  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    PromMorphism g = gen_prom_morphism(seed, {3, 3});
    REQUIRE(check_prom_morphism(g).ok());
    CHECK(check_rep_morphism(R_mor(g)).ok());
  }
}

TEST_CASE("M on objects") {
  auto M = set("M", "m", 2), S = set("S", "s", 1);
  Representation r{M, S, rel(M, S, {{0, 0}}), identity(S)};
  Prom p = M_obj(r);
  CHECK(p.A == S);
  CHECK(p.B.size() == 4);
  CHECK(p.B.label(p.f(0)) == "{m0}");
  CHECK(eq(compose(powerset(M)->mem, graph_upper(p.f)), r.sat));
  CHECK(check_prom(p).ok());

  Prom empty = M_obj(Representation{M, S, Rel(M, S), identity(S)});
  CHECK(empty.B.label(empty.f(0)) == "{}");

  // y is inclusion on the four subsets: count pairs (α,β) with α ⊆ β
  std::size_t inclusions = 0;
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      const bool sub = (a | b) == b;
      inclusions += sub ? 1 : 0;
      CHECK(p.y.test(a, b) == sub);
    }
  CHECK(inclusions == 9);
  CHECK(p.y.count() == 9);
  CHECK(eq(p.y, subset_order(*powerset(M))));
}

TEST_CASE("M on relations is direct image") {
  auto M = set("M", "m", 2), Mp = set("N", "n", 2);
  auto pw = powerset(M);
  CHECK(M_rel(identity(M)) == FnMap::identity(pw->carrier));
  FnMap zero = M_rel(Rel(Mp, M));
  for (std::size_t a = 0; a < 4; ++a) CHECK(zero(a) == 0);

  Rel tau = rel(Mp, M, {{0, 0}});
  FnMap img = M_rel(tau);
  CHECK(img.dst().label(img(3)) == "{n0}");

  auto pwp = powerset(Mp);
  for (const auto& t : o::all(2, 2)) {
    Rel tr = o::to_rel(Mp, M, t);
    FnMap g = M_rel(tr);
    for (std::uint64_t alpha = 0; alpha < 4; ++alpha) CHECK(g(alpha) == direct_image(tr, alpha));
    // ∈⨾M*(τ)^* = τ⨾∈
    CHECK(eq(compose(pwp->mem, graph_upper(g)), compose(tr, pw->mem)));
  }
}

TEST_CASE("M on morphisms") {
  auto M = set("M", "m", 2), S = set("S", "s", 1);
  Representation r{M, S, rel(M, S, {{0, 0}}), identity(S)};
  PromMorphism mid = M_mor(identity_rep_morphism(r));
  CHECK(same_prom_morphism(mid, identity_prom_morphism(M_obj(r))));

  Representation e{M, S, Rel(M, S), identity(S)};
  RepMorphism zero{e, e, FnMap::identity(S), Rel(M, M)};
  REQUIRE(check_rep_morphism(zero).ok());
  PromMorphism mz = M_mor(zero);
  for (std::size_t a = 0; a < 4; ++a) CHECK(mz.psi(a) == 0);
  CHECK(check_prom_morphism(mz).ok());

  std::size_t checked = 0;
  auto M1 = set("M", "m", 1), S2 = set("S", "s", 2);
  for (const auto& x : all_representations(M1, S2))
    for (const auto& y : all_representations(M1, S2))
      for (const auto& m : enumerate_rep_morphisms(x, y)) {
        CHECK(check_prom_morphism(M_mor(m)).ok());
        ++checked;
      }
  CHECK(checked >= 200);
}

TEST_CASE("R is lax: a two-chain gives a strict identity inequality") {
  auto A = set("A", "a", 2), B = set("B", "b", 2);
  Prom p{A, B, identity(A), chain2(B), fn(A, B, {0, 1})};
  RepMorphism r = R_mor(identity_prom_morphism(p));
  RepMorphism id = identity_rep_morphism(R_obj(p));
  CHECK(repmor_leq(id, r));
  CHECK_FALSE(repmor_leq(r, id));
}
