#pragma once

// Preorders, proms (order-preserving maps between preordered carriers),
// representations, their morphisms, and the 2-cell order on representation
// morphisms.
//
// The structs are plain aggregates so that invalid values can be built and
// fed to the check_* functions; the make_* constructors validate eagerly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "promrep/rel_core.hpp"

namespace promrep {

struct Preorder {
  FinSet carrier;
  Rel rel;
};

/// ⟨A, B, x, y, f⟩ with f^*⨾x ≤ y⨾f^*.
struct Prom {
  FinSet A;
  FinSet B;
  Rel x;
  Rel y;
  FnMap f;
};

/// Functions φ: src.A → dst.A and ψ: src.B → dst.B with ψ∘f = f'∘φ.
struct PromMorphism {
  Prom src;
  Prom dst;
  FnMap phi;
  FnMap psi;
};

/// ⟨M, S, ⊨, ≤⟩ with ⊨⨾≤ ≤ ⊨.
struct Representation {
  FinSet M;
  FinSet S;
  Rel sat;
  Rel ord;
};

/// φ: src.S → dst.S and τ: dst.M ⇸ src.M with τ⨾⊨ = ⊨'⨾φ^*.
struct RepMorphism {
  Representation src;
  Representation dst;
  FnMap phi;
  Rel tau;
};

// Axiom tags used in reports and witnesses.
namespace axiom {
inline constexpr const char* kReflexivity = "reflexivity";
inline constexpr const char* kTransitivity = "transitivity";
inline constexpr const char* kOrderPreservation = "order preservation";
inline constexpr const char* kCommutation = "commutation";
inline constexpr const char* kSoundness = "soundness";
inline constexpr const char* kMorphismEquation = "morphism equation";
}  // namespace axiom

/// A violated axiom with the offending pair(s), as labels.
struct Violation {
  std::string axiom;
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct AxiomResult {
  std::string axiom;
  std::optional<Violation> violation;
};

/// Outcome of a structure check: one entry per axiom in evaluation order.
struct CheckReport {
  std::vector<AxiomResult> results;

  bool ok() const noexcept;
  const Violation* first_violation() const noexcept;
  void add(std::string axiom, std::optional<Violation> violation);
  /// Appends `other` with every axiom tag prefixed by `prefix`.
  void merge(const std::string& prefix, const CheckReport& other);
};

/// Violation for x ≤ y, carrying the first pair of x outside y.
std::optional<Violation> inclusion_violation(const std::string& axiom,
                                             const Rel& x, const Rel& y);
/// Violation for x = y, carrying the first pair in exactly one side.
std::optional<Violation> equality_violation(const std::string& axiom,
                                            const Rel& x, const Rel& y);

// --- preorders ----------------------------------------------------------------

bool is_preorder(const Rel& r);
Preorder preorder_closure(const Rel& r);
CheckReport check_preorder(const Rel& r);
Preorder make_preorder(const Rel& r);

// --- checks -------------------------------------------------------------------

CheckReport check_prom(const Prom& p);
CheckReport check_prom_morphism(const PromMorphism& m);
CheckReport check_representation(const Representation& r);
CheckReport check_rep_morphism(const RepMorphism& m);

Prom make_prom(FinSet A, FinSet B, Rel x, Rel y, FnMap f);
Representation make_representation(FinSet M, FinSet S, Rel sat, Rel ord);
PromMorphism make_prom_morphism(Prom src, Prom dst, FnMap phi, FnMap psi);
RepMorphism make_rep_morphism(Representation src, Representation dst, FnMap phi,
                              Rel tau);

// --- equality, identities, composition -------------------------------------

bool same_prom(const Prom& a, const Prom& b);
bool same_representation(const Representation& a, const Representation& b);
/// Componentwise: equal endpoints, equal maps.
bool same_prom_morphism(const PromMorphism& a, const PromMorphism& b);
bool same_rep_morphism(const RepMorphism& a, const RepMorphism& b);

PromMorphism identity_prom_morphism(const Prom& p);
/// (id_S, 1_M)
RepMorphism identity_rep_morphism(const Representation& r);

/// m2 ∘ m1, requires m1.dst = m2.src.
PromMorphism compose_prom_morphisms(const PromMorphism& m2, const PromMorphism& m1);
/// m2 ∘ m1 = (φ2∘φ1, τ2⨾τ1), requires m1.dst = m2.src.
RepMorphism compose_rep_morphisms(const RepMorphism& m2, const RepMorphism& m1);

/// (φ1, τ1) ⩽ (φ2, τ2) iff φ1 = φ2 and τ1 ≤ τ2. Endpoints must agree.
bool repmor_leq(const RepMorphism& m1, const RepMorphism& m2);

}  // namespace promrep
