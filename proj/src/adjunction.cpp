#include "promrep/adjunction.hpp"

namespace promrep {

FnMap down_set_map(const Rel& y, std::size_t cap) {
  require_same(y.src(), y.dst(), "down_set_map");
  const FinSet& b = y.src();
  auto pw = powerset(b, cap);
  std::vector<std::size_t> image(b.size(), 0);
  for (std::size_t lo = 0; lo < b.size(); ++lo) {
    for (std::size_t hi = 0; hi < b.size(); ++hi) {
      if (y.test(lo, hi)) image[hi] |= std::size_t{1} << lo;
    }
  }
  return FnMap(b, pw->carrier, std::move(image));
}

PromMorphism unit(const Prom& p, std::size_t cap) {
  return PromMorphism{p, M_obj(R_obj(p), cap), FnMap::identity(p.A),
                      down_set_map(p.y, cap)};
}

RepMorphism counit(const Representation& r, std::size_t cap) {
  auto pw = powerset(r.M, cap);
  return RepMorphism{R_obj(M_obj(r, cap)), r, FnMap::identity(r.S), pw->mem};
}

Rel mem_residual_recover(const Rel& x, std::size_t cap) {
  auto pw = powerset(x.src(), cap);
  return compose(pw->mem, left_residual(pw->mem, x));
}

TriangleRepr triangle_repr(const Prom& p, std::size_t cap) {
  const Representation rp = R_obj(p);
  RepMorphism composite = compose_rep_morphisms(counit(rp, cap), R_mor(unit(p, cap)));
  TriangleRepr out{std::move(composite)};
  out.equals_y = out.composite.phi == FnMap::identity(p.A) && eq(out.composite.tau, p.y);
  out.above_identity = repmor_leq(identity_rep_morphism(rp), out.composite);
  out.strict = !eq(p.y, identity(p.B));
  return out;
}

FnMap triangle_pom_map(const Representation& r, std::size_t cap) {
  auto pw = powerset(r.M, cap);
  std::vector<std::size_t> image(pw->carrier.size(), 0);
  for (std::size_t alpha = 0; alpha < image.size(); ++alpha) {
    // union over every β ⊆ α, visiting submasks of α
    std::size_t acc = 0;
    for (std::size_t beta = alpha;; beta = (beta - 1) & alpha) {
      acc |= beta;
      if (beta == 0) break;
    }
    image[alpha] = acc;
  }
  return FnMap(pw->carrier, pw->carrier, std::move(image));
}

bool triangle_pom(const Representation& r, std::size_t cap) {
  auto pw = powerset(r.M, cap);
  const FnMap second = triangle_pom_map(r, cap);
  const FnMap first = compose_fn(FnMap::identity(r.S), FnMap::identity(r.S));
  return first == FnMap::identity(r.S) &&
         fn_eq_into_powerset(*pw, second, FnMap::identity(pw->carrier));
}

FnMap psi(const Rel& tau, const Rel& y, std::size_t cap) {
  require_same(tau.dst(), y.src(), "psi");
  require_same(y.src(), y.dst(), "psi");
  const Rel ty = compose(tau, y);  // (m,b) ∈ τ⨾y iff m ∈ Ψτ(b)
  auto pw = powerset(tau.src(), cap);
  std::vector<std::size_t> image(y.src().size(), 0);
  for (std::size_t m = 0; m < tau.src().size(); ++m) {
    for (std::size_t b = 0; b < y.src().size(); ++b) {
      if (ty.test(m, b)) image[b] |= std::size_t{1} << m;
    }
  }
  return FnMap(y.src(), pw->carrier, std::move(image));
}

Rel tee(const FinSet& models, const FnMap& psi_map, std::size_t cap) {
  auto pw = powerset(models, cap);
  require_same(psi_map.dst(), pw->carrier, "tee");
  return compose(pw->mem, graph_upper(psi_map));
}

namespace {

void require_valid(const CheckReport& report, const char* what) {
  if (const Violation* v = report.first_violation()) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " is not a valid morphism: " + v->axiom);
  }
}

}  // namespace

PromMorphism galois_lift(const Prom& p, const Representation& r,
                         const RepMorphism& m, std::size_t cap) {
  if (!same_representation(m.src, R_obj(p)) || !same_representation(m.dst, r)) {
    throw Error(ErrorCode::InvalidArgument, "galois_lift: morphism is not R(p) → R");
  }
  require_valid(check_rep_morphism(m), "galois_lift input");
  return PromMorphism{p, M_obj(r, cap), m.phi, psi(m.tau, p.y, cap)};
}

RepMorphism galois_lower(const Prom& p, const Representation& r,
                         const PromMorphism& m, std::size_t cap) {
  const Prom mr = M_obj(r, cap);
  if (!same_prom(m.src, p) || !same_prom(m.dst, mr)) {
    throw Error(ErrorCode::InvalidArgument, "galois_lower: morphism is not p → M(R)");
  }
  require_valid(check_prom_morphism(m), "galois_lower input");
  return RepMorphism{R_obj(p), r, m.phi, tee(r.M, m.psi, cap)};
}

}  // namespace promrep
