#pragma once

// R: proms → representations (lax) and M: representations → proms (strict).

#include "promrep/structures.hpp"

namespace promrep {

/// R⟨A,B,x,y,f⟩ = ⟨B, A, y⨾f^*, x⟩
Representation R_obj(const Prom& p);

/// R(φ,ψ) = (φ, y'⨾ψ^*)
RepMorphism R_mor(const PromMorphism& m);

/// M⟨M,S,⊨,≤⟩ = ⟨S, 2^M, ≤, ⊆, s ↦ {m | m ⊨ s}⟩, with ⊆ computed as ∈\∈.
Prom M_obj(const Representation& r, std::size_t cap = kDefaultPowersetCap);

/// For τ: M' ⇸ M, the direct image α ↦ {m' | ∃m ∈ α. (m',m) ∈ τ} on 2^M → 2^M'.
FnMap M_rel(const Rel& tau, std::size_t cap = kDefaultPowersetCap);

/// M(φ,τ) = (φ, M_rel(τ))
PromMorphism M_mor(const RepMorphism& m, std::size_t cap = kDefaultPowersetCap);
/// Same, with M(src) and M(dst) supplied by the caller.
PromMorphism M_mor(const RepMorphism& m, const Prom& src_image, const Prom& dst_image,
                   std::size_t cap = kDefaultPowersetCap);

/// The inclusion order on 2^base built by comparing bitmasks directly.
Rel subset_order(const PowersetBundle& pw);

}  // namespace promrep
