#include "doctest.h"
#include "support.hpp"

using namespace promrep;
using namespace support;

TEST_CASE("exact representations") {
  auto M = set("M", "m", 1), S1 = set("S", "s", 1);
  CHECK(is_exact(Representation{M, S1, rel(M, S1, {{0, 0}}), identity(S1)}));

  auto S2 = set("S", "s", 2);
  Representation empty{M, S2, Rel(M, S2), identity(S2)};
  CHECK(eq(left_residual(empty.sat, empty.sat), Rel::full(S2, S2)));
  CHECK_FALSE(is_exact(empty));

  for (const auto& r : all_representations(set("M", "m", 2), S2)) {
    if (eq(r.ord, Rel::full(S2, S2))) CHECK(is_exact(r));
  }
}

TEST_CASE("order-reflecting proms") {
  auto A = set("A", "a", 2), B = set("B", "b", 2);
  FnMap inj = fn(A, B, {0, 1});
  CHECK(is_order_reflecting(Prom{A, B, pullback_order(chain2(B), inj), chain2(B), inj}));
  CHECK(is_order_reflecting(Prom{A, B, identity(A), identity(B), inj}));

  auto B1 = set("B", "b", 1);
  FnMap constant = fn(A, B1, {0, 0});
  Prom collapsed{A, B1, identity(A), identity(B1), constant};
  CHECK(eq(pullback_order(collapsed.y, constant), Rel::full(A, A)));
  CHECK_FALSE(is_order_reflecting(collapsed));
}

TEST_CASE("the two transfer lemmas on all small structures") {
  std::size_t exact = 0, inexact = 0;
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t s = 0; s <= 2; ++s)
      for (const auto& r : all_representations(set("M", "m", m), set("S", "s", s))) {
        const bool e = is_exact(r);
        CHECK(e == is_order_reflecting(M_obj(r)));
        if (e) CHECK(eq(left_residual(r.sat, r.sat), r.ord));
        (e ? exact : inexact) += 1;
      }
  CHECK(exact > 0);
  CHECK(inexact > 0);

  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (const auto& p : all_proms(set("A", "a", a), set("B", "b", b))) {
        const bool refl = is_order_reflecting(p);
        CHECK(refl == is_exact(R_obj(p)));
        if (refl) CHECK(eq(p.x, pullback_order(p.y, p.f)));
      }
}

TEST_CASE("soundness is the converse entailment") {
  auto M = set("M", "m", 2), S = set("S", "s", 2);
  for (const auto& ord : all_preorders(S))
    for (const auto& sat : all_relations(M, S)) {
      CHECK(leq(compose(sat, ord), sat) == leq(ord, left_residual(sat, sat)));
      CHECK(entailment_contains_order(Representation{M, S, sat, ord}) ==
            leq(ord, left_residual(sat, sat)));
    }
}
