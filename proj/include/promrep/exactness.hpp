#pragma once

#include "promrep/structures.hpp"

namespace promrep {

/// ⊨\⊨ ≤ ≤
bool is_exact(const Representation& r);

/// f_*⨾y⨾f^* ≤ x
bool is_order_reflecting(const Prom& p);

/// f_*⨾y⨾f^*, the preorder pulled back from B along f.
Rel pullback_order(const Rel& y, const FnMap& f);

/// ⊨⨾≤ ≤ ⊨ (soundness) holds exactly when ≤ ≤ ⊨\⊨.
bool entailment_contains_order(const Representation& r);

}  // namespace promrep
