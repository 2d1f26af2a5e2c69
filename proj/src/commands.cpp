#include "promrep/commands.hpp"

#include <sstream>

namespace promrep {

namespace {

std::string format_violation(const Violation& v) {
  std::string out = "violated";
  for (const auto& [a, b] : v.pairs) out += " (" + a + "," + b + ")";
  return out;
}

bool is_functor(const std::string& f) {
  for (const char* k : kFunctors) {
    if (f == k) return true;
  }
  return false;
}

[[noreturn]] void wrong_kind(const std::string& functor, const std::string& name,
                             const Structure& s) {
  throw Error(ErrorCode::Kind, functor + " does not apply to '" + name + "' of kind " +
                                   std::string(kind_name(s)));
}

Prom hom_prom(const Workspace& ws, const RepMorphism& m, const std::string& aux) {
  if (!aux.empty()) {
    const Prom& p = ws.structure_as<Prom>(aux);
    if (!same_representation(R_obj(p), m.src)) {
      throw Error(ErrorCode::InvalidArgument, "R(" + aux + ") is not the source of the morphism");
    }
    return p;
  }
  std::vector<std::string> found;
  for (const auto& n : ws.structure_names()) {
    const auto* p = std::get_if<Prom>(&ws.structure(n));
    if (p && same_representation(R_obj(*p), m.src)) found.push_back(n);
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                found.empty() ? "no prom p with R(p) equal to the morphism source; pass --prom"
                              : "several proms match the morphism source; pass --prom");
  }
  return ws.structure_as<Prom>(found.front());
}

Representation hom_rep(const Workspace& ws, const PromMorphism& n, const std::string& aux,
                       std::size_t cap) {
  if (!aux.empty()) {
    const Representation& r = ws.structure_as<Representation>(aux);
    if (!same_prom(M_obj(r, cap), n.dst)) {
      throw Error(ErrorCode::InvalidArgument, "M(" + aux + ") is not the target of the morphism");
    }
    return r;
  }
  std::vector<std::string> found;
  for (const auto& name : ws.structure_names()) {
    const auto* r = std::get_if<Representation>(&ws.structure(name));
    if (r && r->M.size() <= cap && same_prom(M_obj(*r, cap), n.dst)) found.push_back(name);
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                found.empty()
                    ? "no representation R with M(R) equal to the morphism target; pass --rep"
                    : "several representations match the morphism target; pass --rep");
  }
  return ws.structure_as<Representation>(found.front());
}

}  // namespace

CheckOutcome check_named(const Workspace& ws, const std::string& name) {
  const Structure& s = ws.structure(name);
  const CheckReport report = check_structure(s);
  std::ostringstream os;
  os << "structure: " << name << "\n";
  os << "kind: " << kind_name(s) << "\n";
  for (const auto& r : report.results) {
    os << r.axiom << ": " << (r.violation ? format_violation(*r.violation) : "ok") << "\n";
  }
  os << "result: " << (report.ok() ? "ok" : "violated") << "\n";
  return CheckOutcome{report.ok(), os.str()};
}

Workspace apply_functor(const Workspace& ws, const std::string& functor, const std::string& name,
                        const std::string& aux, std::size_t cap) {
  if (!is_functor(functor)) {
    throw Error(ErrorCode::InvalidArgument, "unknown functor '" + functor + "'");
  }
  const Structure& s = ws.structure(name);
  const std::string target = functor + "(" + name + ")";
  Workspace out;

  if (functor == "R" || functor == "MR") {
    const bool then_m = functor == "MR";
    if (const auto* p = std::get_if<Prom>(&s)) {
      Representation r = R_obj(*p);
      then_m ? (void)out.add_prom(target, M_obj(r, cap)) : (void)out.add_representation(target, r);
    } else if (const auto* m = std::get_if<PromMorphism>(&s)) {
      RepMorphism rm = R_mor(*m);
      then_m ? (void)out.add_prom_morphism(target, M_mor(rm, cap))
             : (void)out.add_rep_morphism(target, rm);
    } else {
      wrong_kind(functor, name, s);
    }
  } else if (functor == "M" || functor == "RM") {
    const bool then_r = functor == "RM";
    if (const auto* r = std::get_if<Representation>(&s)) {
      Prom p = M_obj(*r, cap);
      then_r ? (void)out.add_representation(target, R_obj(p)) : (void)out.add_prom(target, p);
    } else if (const auto* m = std::get_if<RepMorphism>(&s)) {
      PromMorphism pm = M_mor(*m, cap);
      then_r ? (void)out.add_rep_morphism(target, R_mor(pm))
             : (void)out.add_prom_morphism(target, pm);
    } else {
      wrong_kind(functor, name, s);
    }
  } else if (functor == "unit") {
    const auto* p = std::get_if<Prom>(&s);
    if (!p) wrong_kind(functor, name, s);
    out.add_prom_morphism(target, unit(*p, cap), name, "MR(" + name + ")");
  } else if (functor == "counit") {
    const auto* r = std::get_if<Representation>(&s);
    if (!r) wrong_kind(functor, name, s);
    out.add_rep_morphism(target, counit(*r, cap), "RM(" + name + ")", name);
  } else if (functor == "psi") {
    const auto* m = std::get_if<RepMorphism>(&s);
    if (!m) wrong_kind(functor, name, s);
    const Prom p = hom_prom(ws, *m, aux);
    out.add_prom_morphism(target, galois_lift(p, m->dst, *m, cap));
  } else {
    const auto* n = std::get_if<PromMorphism>(&s);
    if (!n) wrong_kind(functor, name, s);
    const Representation r = hom_rep(ws, *n, aux, cap);
    out.add_rep_morphism(target, galois_lower(n->src, r, *n, cap));
  }
  return out;
}

std::string laws_listing() {
  std::string out;
  for (const auto& info : law_catalog()) out += info.name + ": " + info.citation + "\n";
  return out;
}

}  // namespace promrep
