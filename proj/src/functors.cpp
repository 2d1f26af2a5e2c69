#include "promrep/functors.hpp"

#include <cstdint>

namespace promrep {

Representation R_obj(const Prom& p) {
  return Representation{p.B, p.A, compose(p.y, graph_upper(p.f)), p.x};
}

RepMorphism R_mor(const PromMorphism& m) {
  return RepMorphism{R_obj(m.src), R_obj(m.dst), m.phi,
                     compose(m.dst.y, graph_upper(m.psi))};
}

Prom M_obj(const Representation& r, std::size_t cap) {
  auto pw = powerset(r.M, cap);
  std::vector<std::size_t> image(r.S.size(), 0);
  for (std::size_t m = 0; m < r.M.size(); ++m) {
    for (std::size_t s = 0; s < r.S.size(); ++s) {
      if (r.sat.test(m, s)) image[s] |= std::size_t{1} << m;
    }
  }
  return Prom{r.S, pw->carrier, r.ord, left_residual(pw->mem, pw->mem),
              FnMap(r.S, pw->carrier, std::move(image))};
}

FnMap M_rel(const Rel& tau, std::size_t cap) {
  const FinSet& target_models = tau.src();  // M'
  const FinSet& source_models = tau.dst();  // M
  auto from = powerset(source_models, cap);
  auto to = powerset(target_models, cap);
  // column[m] = {m' | (m',m) ∈ τ} as a bitmask over M'
  std::vector<std::size_t> column(source_models.size(), 0);
  for (std::size_t mp = 0; mp < target_models.size(); ++mp) {
    for (std::size_t m = 0; m < source_models.size(); ++m) {
      if (tau.test(mp, m)) column[m] |= std::size_t{1} << mp;
    }
  }
  std::vector<std::size_t> image(from->carrier.size(), 0);
  for (std::size_t alpha = 0; alpha < image.size(); ++alpha) {
    std::size_t out = 0;
    for (std::size_t m = 0; m < source_models.size(); ++m) {
      if ((alpha >> m) & 1U) out |= column[m];
    }
    image[alpha] = out;
  }
  return FnMap(from->carrier, to->carrier, std::move(image));
}

PromMorphism M_mor(const RepMorphism& m, std::size_t cap) {
  return PromMorphism{M_obj(m.src, cap), M_obj(m.dst, cap), m.phi, M_rel(m.tau, cap)};
}

PromMorphism M_mor(const RepMorphism& m, const Prom& src_image, const Prom& dst_image,
                   std::size_t cap) {
  require_same(src_image.A, m.src.S, "M_mor");
  require_same(dst_image.A, m.dst.S, "M_mor");
  return PromMorphism{src_image, dst_image, m.phi, M_rel(m.tau, cap)};
}

Rel subset_order(const PowersetBundle& pw) {
  Rel r(pw.carrier, pw.carrier);
  const std::size_t n = pw.carrier.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & ~b) == 0) r.set(a, b);
    }
  }
  return r;
}

}  // namespace promrep
