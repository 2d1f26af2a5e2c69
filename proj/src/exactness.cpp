#include "promrep/exactness.hpp"

namespace promrep {

bool is_exact(const Representation& r) {
  return leq(left_residual(r.sat, r.sat), r.ord);
}

Rel pullback_order(const Rel& y, const FnMap& f) {
  return compose(graph_lower(f), compose(y, graph_upper(f)));
}

bool is_order_reflecting(const Prom& p) { return leq(pullback_order(p.y, p.f), p.x); }

bool entailment_contains_order(const Representation& r) {
  return leq(r.ord, left_residual(r.sat, r.sat));
}

}  // namespace promrep
