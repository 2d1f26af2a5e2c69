#pragma once

// Operations behind the command-line verbs. Everything here returns text and
// throws promrep::Error on input problems; exit codes are decided by callers.

#include <string>

#include "promrep/harness.hpp"

namespace promrep {

struct CheckOutcome {
  bool holds = false;
  std::string report;  // one "axiom: ok|violated ..." line per axiom
};

CheckOutcome check_named(const Workspace& ws, const std::string& name);

inline constexpr const char* kFunctors[] = {"R",    "M",      "MR",  "RM",
                                            "unit", "counit", "psi", "tee"};

/// Applies a functor, unit/counit or one side of the Galois correspondence
/// to the named structure. `aux` names the prom (psi) or representation (tee)
/// completing the hom-set; empty means search the workspace for it.
Workspace apply_functor(const Workspace& ws, const std::string& functor,
                        const std::string& name, const std::string& aux = {},
                        std::size_t cap = kDefaultPowersetCap);

/// `name: citation` per law, in catalog order.
std::string laws_listing();

}  // namespace promrep
