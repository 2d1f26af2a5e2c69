#pragma once

// Unit and counit of the R ⊣ M adjunction, the two triangle composites, and
// the hom-set correspondence Ψ / T between representation morphisms out of
// R(p) and prom morphisms into M(R).

#include "promrep/functors.hpp"

namespace promrep {

/// b ↦ {b' | (b',b) ∈ y} as a map B → 2^B.
FnMap down_set_map(const Rel& y, std::size_t cap = kDefaultPowersetCap);

/// η_p = (id_A, down-set map of y): p → M(R(p)).
PromMorphism unit(const Prom& p, std::size_t cap = kDefaultPowersetCap);

/// ε_R = (id_S, ∈): R(M(R)) → R.
RepMorphism counit(const Representation& r, std::size_t cap = kDefaultPowersetCap);

/// ∈⨾(∈\x) for x: A ⇸ B, with ∈ the membership relation of 2^A.
Rel mem_residual_recover(const Rel& x, std::size_t cap = kDefaultPowersetCap);

struct TriangleRepr {
  RepMorphism composite;  // ε_{R(p)} ∘ R(η_p)
  bool equals_y = false;  // composite = (id_A, y)
  bool above_identity = false;  // id ⩽ composite
  bool strict = false;  // y ≠ 1_B
};

TriangleRepr triangle_repr(const Prom& p, std::size_t cap = kDefaultPowersetCap);

/// Second component of M(ε_R) ∘ η_{M(R)} as a map 2^M → 2^M, evaluated
/// pointwise as α ↦ ⋃{β | β ⊆ α} without building 2^(2^M).
FnMap triangle_pom_map(const Representation& r, std::size_t cap = kDefaultPowersetCap);

/// M(ε_R) ∘ η_{M(R)} = id_{M(R)}, with map equality decided through ∈.
bool triangle_pom(const Representation& r, std::size_t cap = kDefaultPowersetCap);

/// Ψτ = b ↦ {m | ∃b'. (m,b') ∈ τ ∧ (b',b) ∈ y}, for τ: M ⇸ B.
FnMap psi(const Rel& tau, const Rel& y, std::size_t cap = kDefaultPowersetCap);

/// Tψ = ∈⨾ψ^*, for ψ: B → 2^M.
Rel tee(const FinSet& models, const FnMap& psi_map,
        std::size_t cap = kDefaultPowersetCap);

/// Ψ(φ,τ) = (φ, Ψτ): turns m: R(p) → r into p → M(r).
PromMorphism galois_lift(const Prom& p, const Representation& r,
                         const RepMorphism& m, std::size_t cap = kDefaultPowersetCap);

/// T(φ,ψ) = (φ, Tψ): turns m: p → M(r) into R(p) → r.
RepMorphism galois_lower(const Prom& p, const Representation& r,
                         const PromMorphism& m, std::size_t cap = kDefaultPowersetCap);

}  // namespace promrep
