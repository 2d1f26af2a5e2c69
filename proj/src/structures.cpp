#include "promrep/structures.hpp"

namespace promrep {

bool CheckReport::ok() const noexcept { return first_violation() == nullptr; }

const Violation* CheckReport::first_violation() const noexcept {
  for (const auto& r : results) {
    if (r.violation) return &*r.violation;
  }
  return nullptr;
}

void CheckReport::add(std::string axiom, std::optional<Violation> violation) {
  results.push_back({std::move(axiom), std::move(violation)});
}

void CheckReport::merge(const std::string& prefix, const CheckReport& other) {
  for (const auto& r : other.results) {
    std::optional<Violation> v = r.violation;
    if (v) v->axiom = prefix + v->axiom;
    results.push_back({prefix + r.axiom, std::move(v)});
  }
}

namespace {

std::pair<std::string, std::string> labelled(const Rel& r, std::size_t i,
                                             std::size_t j) {
  return {r.src().label(i), r.dst().label(j)};
}

bool shape_is(const Rel& r, const FinSet& src, const FinSet& dst) {
  return r.src() == src && r.dst() == dst;
}

void require_shape(const Rel& r, const FinSet& src, const FinSet& dst,
                   const std::string& what) {
  if (!shape_is(r, src, dst)) {
    throw Error(ErrorCode::CarrierMismatch,
                what + ": expected relation " + src.name() + " ⇸ " + dst.name());
  }
}

void require_fn_shape(const FnMap& f, const FinSet& src, const FinSet& dst,
                      const std::string& what) {
  if (!(f.src() == src && f.dst() == dst)) {
    throw Error(ErrorCode::CarrierMismatch,
                what + ": expected function " + src.name() + " → " + dst.name());
  }
}

}  // namespace

std::optional<Violation> inclusion_violation(const std::string& axiom,
                                             const Rel& x, const Rel& y) {
  if (auto p = first_excess(x, y)) {
    return Violation{axiom, {labelled(x, p->first, p->second)}};
  }
  return std::nullopt;
}

std::optional<Violation> equality_violation(const std::string& axiom,
                                            const Rel& x, const Rel& y) {
  if (auto v = inclusion_violation(axiom, x, y)) return v;
  return inclusion_violation(axiom, y, x);
}

// --- preorders ----------------------------------------------------------------

CheckReport check_preorder(const Rel& r) {
  require_same(r.src(), r.dst(), "preorder must be square");
  CheckReport report;
  report.add(axiom::kReflexivity,
             inclusion_violation(axiom::kReflexivity, identity(r.src()), r));
  report.add(axiom::kTransitivity,
             inclusion_violation(axiom::kTransitivity, compose(r, r), r));
  return report;
}

bool is_preorder(const Rel& r) { return check_preorder(r).ok(); }

Preorder preorder_closure(const Rel& r) {
  require_same(r.src(), r.dst(), "preorder_closure");
  Rel c = join(r, identity(r.src()));
  // Squaring doubles the covered path length; stops at the fixpoint.
  while (true) {
    Rel next = compose(c, c);
    if (next.same_bits(c)) break;
    c = std::move(next);
  }
  return Preorder{r.src(), std::move(c)};
}

Preorder make_preorder(const Rel& r) {
  auto report = check_preorder(r);
  if (!report.ok()) {
    throw Error(ErrorCode::InvalidStructure,
                "not a preorder: " + report.first_violation()->axiom);
  }
  return Preorder{r.src(), r};
}

// --- checks -------------------------------------------------------------------

CheckReport check_prom(const Prom& p) {
  require_shape(p.x, p.A, p.A, "prom x");
  require_shape(p.y, p.B, p.B, "prom y");
  require_fn_shape(p.f, p.A, p.B, "prom f");
  CheckReport report;
  report.merge("x: ", check_preorder(p.x));
  report.merge("y: ", check_preorder(p.y));
  const Rel fu = graph_upper(p.f);
  report.add(axiom::kOrderPreservation,
             inclusion_violation(axiom::kOrderPreservation, compose(fu, p.x),
                                 compose(p.y, fu)));
  return report;
}

CheckReport check_prom_morphism(const PromMorphism& m) {
  CheckReport report;
  report.merge("src: ", check_prom(m.src));
  report.merge("dst: ", check_prom(m.dst));
  require_fn_shape(m.phi, m.src.A, m.dst.A, "prom morphism phi");
  require_fn_shape(m.psi, m.src.B, m.dst.B, "prom morphism psi");
  report.merge("phi: ", check_prom(Prom{m.src.A, m.dst.A, m.src.x, m.dst.x, m.phi}));
  report.merge("psi: ", check_prom(Prom{m.src.B, m.dst.B, m.src.y, m.dst.y, m.psi}));
  report.add(axiom::kCommutation,
             equality_violation(axiom::kCommutation,
                                compose(graph_upper(m.psi), graph_upper(m.src.f)),
                                compose(graph_upper(m.dst.f), graph_upper(m.phi))));
  return report;
}

CheckReport check_representation(const Representation& r) {
  require_shape(r.sat, r.M, r.S, "representation sat");
  require_shape(r.ord, r.S, r.S, "representation ord");
  CheckReport report;
  report.merge("ord: ", check_preorder(r.ord));
  report.add(axiom::kSoundness,
             inclusion_violation(axiom::kSoundness, compose(r.sat, r.ord), r.sat));
  return report;
}

CheckReport check_rep_morphism(const RepMorphism& m) {
  CheckReport report;
  report.merge("src: ", check_representation(m.src));
  report.merge("dst: ", check_representation(m.dst));
  require_fn_shape(m.phi, m.src.S, m.dst.S, "rep morphism phi");
  require_shape(m.tau, m.dst.M, m.src.M, "rep morphism tau");
  report.merge("phi: ", check_prom(Prom{m.src.S, m.dst.S, m.src.ord, m.dst.ord, m.phi}));
  report.add(axiom::kMorphismEquation,
             equality_violation(axiom::kMorphismEquation, compose(m.tau, m.src.sat),
                                compose(m.dst.sat, graph_upper(m.phi))));
  return report;
}

namespace {

template <class T>
T validated(T value, CheckReport report, const char* kind) {
  if (const Violation* v = report.first_violation()) {
    std::string msg = std::string("invalid ") + kind + ": " + v->axiom;
    if (!v->pairs.empty()) {
      msg += " (" + v->pairs.front().first + "," + v->pairs.front().second + ")";
    }
    throw Error(ErrorCode::InvalidStructure, msg);
  }
  return value;
}

}  // namespace

Prom make_prom(FinSet A, FinSet B, Rel x, Rel y, FnMap f) {
  Prom p{std::move(A), std::move(B), std::move(x), std::move(y), std::move(f)};
  auto report = check_prom(p);
  return validated(std::move(p), std::move(report), "prom");
}

Representation make_representation(FinSet M, FinSet S, Rel sat, Rel ord) {
  Representation r{std::move(M), std::move(S), std::move(sat), std::move(ord)};
  auto report = check_representation(r);
  return validated(std::move(r), std::move(report), "representation");
}

PromMorphism make_prom_morphism(Prom src, Prom dst, FnMap phi, FnMap psi) {
  PromMorphism m{std::move(src), std::move(dst), std::move(phi), std::move(psi)};
  auto report = check_prom_morphism(m);
  return validated(std::move(m), std::move(report), "prom morphism");
}

RepMorphism make_rep_morphism(Representation src, Representation dst, FnMap phi,
                              Rel tau) {
  RepMorphism m{std::move(src), std::move(dst), std::move(phi), std::move(tau)};
  auto report = check_rep_morphism(m);
  return validated(std::move(m), std::move(report), "representation morphism");
}

// --- equality, identities, composition -------------------------------------

namespace {

bool same_rel(const Rel& a, const Rel& b) {
  return a.src() == b.src() && a.dst() == b.dst() && a.same_bits(b);
}

}  // namespace

bool same_prom(const Prom& a, const Prom& b) {
  return a.A == b.A && a.B == b.B && same_rel(a.x, b.x) && same_rel(a.y, b.y) &&
         a.f == b.f;
}

bool same_representation(const Representation& a, const Representation& b) {
  return a.M == b.M && a.S == b.S && same_rel(a.sat, b.sat) && same_rel(a.ord, b.ord);
}

bool same_prom_morphism(const PromMorphism& a, const PromMorphism& b) {
  return same_prom(a.src, b.src) && same_prom(a.dst, b.dst) && a.phi == b.phi &&
         a.psi == b.psi;
}

bool same_rep_morphism(const RepMorphism& a, const RepMorphism& b) {
  return same_representation(a.src, b.src) && same_representation(a.dst, b.dst) &&
         a.phi == b.phi && same_rel(a.tau, b.tau);
}

PromMorphism identity_prom_morphism(const Prom& p) {
  return PromMorphism{p, p, FnMap::identity(p.A), FnMap::identity(p.B)};
}

RepMorphism identity_rep_morphism(const Representation& r) {
  return RepMorphism{r, r, FnMap::identity(r.S), identity(r.M)};
}

PromMorphism compose_prom_morphisms(const PromMorphism& m2, const PromMorphism& m1) {
  if (!same_prom(m1.dst, m2.src)) {
    throw Error(ErrorCode::CarrierMismatch,
                "compose_prom_morphisms: endpoints do not match");
  }
  return PromMorphism{m1.src, m2.dst, compose_fn(m2.phi, m1.phi),
                      compose_fn(m2.psi, m1.psi)};
}

RepMorphism compose_rep_morphisms(const RepMorphism& m2, const RepMorphism& m1) {
  if (!same_representation(m1.dst, m2.src)) {
    throw Error(ErrorCode::CarrierMismatch,
                "compose_rep_morphisms: endpoints do not match");
  }
  return RepMorphism{m1.src, m2.dst, compose_fn(m2.phi, m1.phi),
                     compose(m2.tau, m1.tau)};
}

bool repmor_leq(const RepMorphism& m1, const RepMorphism& m2) {
  if (!same_representation(m1.src, m2.src) || !same_representation(m1.dst, m2.dst)) {
    throw Error(ErrorCode::CarrierMismatch, "repmor_leq: different hom-sets");
  }
  return m1.phi == m2.phi && leq(m1.tau, m2.tau);
}

}  // namespace promrep
