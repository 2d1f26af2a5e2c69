// The law catalog: one LawDefinition per identifier, each pairing an
// exhaustive enumerator, a seeded generator and the law's check.

#include <algorithm>
#include <numeric>

#include "promrep/harness.hpp"

namespace promrep {

namespace {

// --- helpers ------------------------------------------------------------------

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return std::min(kSaturated, a + b);
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t pow2(std::size_t exp) {
  return exp >= 62 ? kSaturated : (std::uint64_t{1} << exp);
}

/// Every size tuple bounded componentwise by `dims`, smallest total first.
std::vector<Sizes> size_tuples(const Sizes& dims) {
  std::vector<Sizes> out{Sizes{}};
  for (std::size_t d : dims) {
    std::vector<Sizes> next;
    for (const auto& prefix : out) {
      for (std::size_t v = 0; v <= d; ++v) {
        Sizes s = prefix;
        s.push_back(v);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Sizes& a, const Sizes& b) {
    return std::accumulate(a.begin(), a.end(), std::size_t{0}) <
           std::accumulate(b.begin(), b.end(), std::size_t{0});
  });
  return out;
}

template <class F>
std::uint64_t sum_over(const Sizes& dims, F f) {
  std::uint64_t total = 0;
  for (const auto& s : size_tuples(dims)) total = sat_add(total, f(s));
  return total;
}

std::string shape_of(const Sizes& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(s[i]);
  }
  return out;
}

/// Proms with |A| ≤ a, |B| ≤ b (upper bound before filtering).
std::uint64_t prom_bound(std::size_t a, std::size_t b) {
  return sum_over({a, b}, [](const Sizes& s) {
    return sat_mul(sat_mul(preorder_count(s[0]), preorder_count(s[1])), sat_pow(s[1], s[0]));
  });
}

std::uint64_t rep_bound(std::size_t m, std::size_t s) {
  return sum_over({m, s}, [](const Sizes& t) {
    return sat_mul(preorder_count(t[1]), pow2(t[0] * t[1]));
  });
}

FinSet carrier(const char* name, const char* prefix, std::size_t n) {
  return FinSet::indexed(name, prefix, n);
}

std::size_t draw(Rng& rng, std::size_t max) { return rng.between(0, max); }

Violation fail(std::string axiom) { return Violation{std::move(axiom), {}}; }

std::optional<Violation> first_failure(const CheckReport& report, const std::string& prefix) {
  if (const Violation* v = report.first_violation()) {
    Violation out = *v;
    out.axiom = prefix + out.axiom;
    return out;
  }
  return std::nullopt;
}

/// Map equality into a powerset, decided through ∈ and cross-checked
/// pointwise.
std::optional<Violation> powerset_map_equal(const std::string& axiom,
                                            const PowersetBundle& pw, const FnMap& f,
                                            const FnMap& g) {
  const bool via_mem = fn_eq_into_powerset(pw, f, g);
  const bool pointwise = f == g;
  if (via_mem != pointwise) return fail(axiom + ": equality routes disagree");
  if (pointwise) return std::nullopt;
  for (std::size_t i = 0; i < f.src().size(); ++i) {
    if (f(i) != g(i)) {
      return Violation{axiom,
                       {{f.src().label(i), f.dst().label(f(i))},
                        {g.src().label(i), g.dst().label(g(i))}}};
    }
  }
  return fail(axiom);
}

std::optional<Violation> map_equal(const std::string& axiom, const FnMap& f, const FnMap& g) {
  if (f == g) return std::nullopt;
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) return fail(axiom + ": carriers differ");
  for (std::size_t i = 0; i < f.src().size(); ++i) {
    if (f(i) != g(i)) {
      return Violation{axiom,
                       {{f.src().label(i), f.dst().label(f(i))},
                        {g.src().label(i), g.dst().label(g(i))}}};
    }
  }
  return fail(axiom);
}

/// Prom morphism equality with the second components compared as maps into
/// the powerset `pw`.
std::optional<Violation> prom_morphisms_equal(const std::string& axiom,
                                              const PromMorphism& a, const PromMorphism& b,
                                              const PowersetBundle& pw) {
  if (!same_prom(a.src, b.src) || !same_prom(a.dst, b.dst)) {
    return fail(axiom + ": endpoints differ");
  }
  if (auto v = map_equal(axiom + ": first component", a.phi, b.phi)) return v;
  return powerset_map_equal(axiom + ": second component", pw, a.psi, b.psi);
}

std::optional<Violation> rep_morphisms_equal(const std::string& axiom,
                                             const RepMorphism& a, const RepMorphism& b) {
  if (!same_representation(a.src, b.src) || !same_representation(a.dst, b.dst)) {
    return fail(axiom + ": endpoints differ");
  }
  if (auto v = map_equal(axiom + ": first component", a.phi, b.phi)) return v;
  return equality_violation(axiom + ": second component", a.tau, b.tau);
}

[[noreturn]] void invalid_instance(const std::string& msg) {
  throw Error(ErrorCode::InvalidArgument, "invalid law instance: " + msg);
}

void validate(const CheckReport& report, const std::string& what) {
  if (const Violation* v = report.first_violation()) invalid_instance(what + ": " + v->axiom);
}

Prom valid_prom(const Workspace& ws, const std::string& name) {
  const Prom& p = ws.structure_as<Prom>(name);
  validate(check_prom(p), name);
  return p;
}

Representation valid_rep(const Workspace& ws, const std::string& name) {
  const Representation& r = ws.structure_as<Representation>(name);
  validate(check_representation(r), name);
  return r;
}

PromMorphism valid_prom_morphism(const Workspace& ws, const std::string& name) {
  const PromMorphism& m = ws.structure_as<PromMorphism>(name);
  validate(check_prom_morphism(m), name);
  return m;
}

RepMorphism valid_rep_morphism(const Workspace& ws, const std::string& name) {
  const RepMorphism& m = ws.structure_as<RepMorphism>(name);
  validate(check_rep_morphism(m), name);
  return m;
}

Rel valid_preorder_rel(const Workspace& ws, const std::string& name) {
  const Rel& r = ws.relation(name);
  if (!(r.src() == r.dst())) invalid_instance(name + " must be square");
  validate(check_preorder(r), name);
  return r;
}

// --- object enumeration shared by several laws ----------------------------------

template <class Visit>
void for_each_prom(const Sizes& dims, Visit visit) {
  for (const auto& s : size_tuples(dims)) {
    FinSet A = carrier("A", "a", s[0]);
    FinSet B = carrier("B", "b", s[1]);
    for (const auto& p : all_proms(A, B)) {
      if (!visit(p, s)) return;
    }
  }
}

template <class Visit>
void for_each_rep(const Sizes& dims, Visit visit) {
  for (const auto& s : size_tuples(dims)) {
    FinSet M = carrier("M", "m", s[0]);
    FinSet S = carrier("S", "s", s[1]);
    for (const auto& r : all_representations(M, S)) {
      if (!visit(r, s)) return;
    }
  }
}

std::vector<Prom> proms_upto(const Sizes& dims) {
  std::vector<Prom> out;
  for_each_prom(dims, [&](const Prom& p, const Sizes&) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Representation> reps_upto(const Sizes& dims) {
  std::vector<Representation> out;
  for_each_rep(dims, [&](const Representation& r, const Sizes&) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::string prom_shape(const Prom& p) {
  return std::to_string(p.A.size()) + "x" + std::to_string(p.B.size());
}

std::string rep_shape(const Representation& r) {
  return std::to_string(r.M.size()) + "x" + std::to_string(r.S.size());
}

Prom random_prom(Rng& rng, const Sizes& dims, const char* a_name = "A",
                 const char* b_name = "B") {
  std::size_t b = draw(rng, dims[1]);
  std::size_t a = b == 0 ? 0 : draw(rng, dims[0]);
  return gen_prom(rng, carrier(a_name, "a", a), carrier(b_name, "b", b));
}

Representation random_rep(Rng& rng, const Sizes& dims, const char* m_name = "M",
                          const char* s_name = "S") {
  return gen_representation(rng, carrier(m_name, "m", draw(rng, dims[0])),
                            carrier(s_name, "s", draw(rng, dims[1])));
}

/// A rep morphism out of `src` into a freshly generated representation,
/// falling back to the identity on `src`.
RepMorphism random_rep_morphism_from(Rng& rng, const Representation& src, const Sizes& dims) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Representation dst = random_rep(rng, dims, "M'", "S'");
    if (auto m = pick_rep_morphism(rng, src, dst)) return *m;
  }
  return identity_rep_morphism(src);
}

RepMorphism random_rep_morphism_into(Rng& rng, const Representation& dst, const Sizes& dims) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Representation src = random_rep(rng, dims, "M0", "S0");
    if (auto m = pick_rep_morphism(rng, src, dst)) return *m;
  }
  return identity_rep_morphism(dst);
}

// --- instance types -------------------------------------------------------------

struct RelTriple {
  Rel x, y, z;  // x: A⇸B, y: B⇸C, z: A⇸C
};

struct ModularInst {
  FnMap f, g;  // f: D→B, g: E→C
  Rel x, y;    // x: A⇸B, y: A⇸C
};

struct RelInst {
  Rel x;
};

struct SetInst {
  FinSet M;
};

struct PromInst {
  Prom p;
};

struct RepInst {
  Representation r;
};

struct PromMorInst {
  PromMorphism m;
};

struct RepMorInst {
  RepMorphism m;
};

struct PromMorPair {
  PromMorphism m1, m2;  // m2 ∘ m1
};

struct RepMorPair {
  std::shared_ptr<const RepMorphism> m1, m2;  // m2 ∘ m1
  // M-images precomputed during enumeration; computed on demand when null.
  std::shared_ptr<const PromMorphism> image1, image2;
  bool check_identity = true;
};

struct GaloisInst {
  Prom p;
  Representation r;
  std::optional<RepMorphism> rep_side;    // R(p) → R
  std::optional<PromMorphism> prom_side;  // p → M(R)
};

struct PsiInst {
  Rel tau, y;  // τ: M⇸B, y preorder on B
};

struct SoundInst {
  Rel sat, ord;
};

// --- serialization of instance types ---------------------------------------

Workspace ws_of(const RelTriple& t) {
  Workspace ws;
  ws.add_relation("x", t.x);
  ws.add_relation("y", t.y);
  ws.add_relation("z", t.z);
  return ws;
}

RelTriple triple_of(const Workspace& ws) {
  RelTriple t{ws.relation("x"), ws.relation("y"), ws.relation("z")};
  if (!(t.x.dst() == t.y.src() && t.x.src() == t.z.src() && t.y.dst() == t.z.dst())) {
    invalid_instance("expected x: A⇸B, y: B⇸C, z: A⇸C");
  }
  return t;
}

PromMorInst prom_mor_of(const Workspace& ws) { return {valid_prom_morphism(ws, "m")}; }

Workspace ws_of(const PromMorInst& i) {
  Workspace ws;
  ws.add_prom_morphism("m", i.m, "p", "q");
  return ws;
}

RepMorInst rep_mor_of(const Workspace& ws) { return {valid_rep_morphism(ws, "m")}; }

Workspace ws_of(const RepMorInst& i) {
  Workspace ws;
  ws.add_rep_morphism("m", i.m, "R", "R'");
  return ws;
}

Workspace ws_of(const GaloisInst& g) {
  Workspace ws;
  ws.add_prom("p", g.p);
  ws.add_representation("R", g.r);
  if (g.rep_side) ws.add_rep_morphism("m", *g.rep_side, "R(p)", "R");
  if (g.prom_side) ws.add_prom_morphism("n", *g.prom_side, "p", "M(R)");
  return ws;
}

GaloisInst galois_of(const Workspace& ws) {
  GaloisInst g{valid_prom(ws, "p"), valid_rep(ws, "R"), std::nullopt, std::nullopt};
  if (ws.has_structure("m")) g.rep_side = valid_rep_morphism(ws, "m");
  if (ws.has_structure("n")) g.prom_side = valid_prom_morphism(ws, "n");
  if (!g.rep_side && !g.prom_side) invalid_instance("needs morphism m or n");
  return g;
}

// --- law definitions ------------------------------------------------------------

LawDefinition<RelTriple> galois_law(LawInfo info, bool dual) {
  LawDefinition<RelTriple> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    return sum_over(dims, [](const Sizes& s) {
      return pow2(s[0] * s[1] + s[1] * s[2] + s[0] * s[2]);
    });
  };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const RelTriple&, const std::string&)>& visit) {
    for (const auto& s : size_tuples(dims)) {
      FinSet A = carrier("A", "a", s[0]), B = carrier("B", "b", s[1]),
             C = carrier("C", "c", s[2]);
      const auto xs = all_relations(A, B);
      const auto ys = all_relations(B, C);
      const auto zs = all_relations(A, C);
      const std::string shape = shape_of(s);
      for (const auto& x : xs)
        for (const auto& y : ys)
          for (const auto& z : zs)
            if (!visit(RelTriple{x, y, z}, shape)) return;
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    FinSet A = carrier("A", "a", draw(rng, dims[0])), B = carrier("B", "b", draw(rng, dims[1])),
           C = carrier("C", "c", draw(rng, dims[2]));
    return RelTriple{random_relation(rng, A, B, 0.5), random_relation(rng, B, C, 0.5),
                     random_relation(rng, A, C, 0.5)};
  };
  d.shape = [](const RelTriple& t) {
    return shape_of({t.x.src().size(), t.x.dst().size(), t.y.dst().size()});
  };
  d.check = [dual, name = d.info.name](const RelTriple& t, std::size_t) {
    const Rel xy = compose(t.x, t.y);
    const bool composite_below = leq(xy, t.z);
    const bool residual_side = dual ? leq(t.x, right_residual(t.z, t.y))
                                    : leq(t.y, left_residual(t.x, t.z));
    LawOutcome out;
    out.tags.push_back(composite_below ? "related" : "unrelated");
    if (residual_side != composite_below) {
      out.violation = composite_below
                          ? Violation{name, {}}
                          : *inclusion_violation(name, xy, t.z);
    }
    return out;
  };
  d.to_workspace = [](const RelTriple& t) { return ws_of(t); };
  d.from_workspace = triple_of;
  return d;
}

LawDefinition<ModularInst> modular_law(LawInfo info) {
  LawDefinition<ModularInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    return sum_over(dims, [](const Sizes& s) {
      return sat_mul(sat_mul(pow2(s[0] * s[1] + s[0] * s[2]), sat_pow(s[1], s[3])),
                     sat_pow(s[2], s[4]));
    });
  };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const ModularInst&, const std::string&)>& visit) {
    for (const auto& s : size_tuples(dims)) {
      FinSet A = carrier("A", "a", s[0]), B = carrier("B", "b", s[1]),
             C = carrier("C", "c", s[2]), D = carrier("D", "d", s[3]),
             E = carrier("E", "e", s[4]);
      const auto fs = all_maps(D, B);
      const auto gs = all_maps(E, C);
      const auto xs = all_relations(A, B);
      const auto ys = all_relations(A, C);
      const std::string shape = shape_of(s);
      for (const auto& f : fs)
        for (const auto& g : gs)
          for (const auto& x : xs)
            for (const auto& y : ys)
              if (!visit(ModularInst{f, g, x, y}, shape)) return;
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    Sizes s(5);
    for (std::size_t i = 0; i < 5; ++i) s[i] = draw(rng, dims[i]);
    if (s[1] == 0) s[3] = 0;
    if (s[2] == 0) s[4] = 0;
    FinSet A = carrier("A", "a", s[0]), B = carrier("B", "b", s[1]),
           C = carrier("C", "c", s[2]), D = carrier("D", "d", s[3]),
           E = carrier("E", "e", s[4]);
    return ModularInst{random_map(rng, D, B), random_map(rng, E, C),
                       random_relation(rng, A, B, 0.5), random_relation(rng, A, C, 0.5)};
  };
  d.shape = [](const ModularInst& i) {
    return shape_of({i.x.src().size(), i.x.dst().size(), i.y.dst().size(),
                     i.f.src().size(), i.g.src().size()});
  };
  d.check = [name = d.info.name](const ModularInst& i, std::size_t) {
    const Rel lhs =
        compose(graph_lower(i.f), compose(left_residual(i.x, i.y), graph_upper(i.g)));
    const Rel rhs = left_residual(compose(i.x, graph_upper(i.f)), compose(i.y, graph_upper(i.g)));
    return LawOutcome{equality_violation(name, lhs, rhs), {}};
  };
  d.to_workspace = [](const ModularInst& i) {
    Workspace ws;
    ws.add_function("f", i.f);
    ws.add_function("g", i.g);
    ws.add_relation("x", i.x);
    ws.add_relation("y", i.y);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) {
    ModularInst i{ws.function("f"), ws.function("g"), ws.relation("x"), ws.relation("y")};
    if (!(i.x.src() == i.y.src() && i.f.dst() == i.x.dst() && i.g.dst() == i.y.dst())) {
      invalid_instance("expected f: D→B, g: E→C, x: A⇸B, y: A⇸C");
    }
    return i;
  };
  return d;
}

/// Relation laws over a single x: A⇸B (square when |A| = |B|).
LawDefinition<RelInst> single_relation_law(
    LawInfo info, std::function<LawOutcome(const Rel&, std::size_t)> check) {
  LawDefinition<RelInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    return sum_over(dims, [](const Sizes& s) { return pow2(s[0] * s[1]); });
  };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const RelInst&, const std::string&)>& visit) {
    for (const auto& s : size_tuples(dims)) {
      FinSet A = carrier("A", "a", s[0]);
      FinSet B = s[0] == s[1] ? A : carrier("B", "b", s[1]);
      const std::string shape = shape_of(s);
      for (const auto& x : all_relations(A, B))
        if (!visit(RelInst{x}, shape)) return;
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    const std::size_t a = draw(rng, dims[0]);
    const std::size_t b = draw(rng, dims[1]);
    FinSet A = carrier("A", "a", a);
    FinSet B = a == b ? A : carrier("B", "b", b);
    return RelInst{random_relation(rng, A, B, 0.5)};
  };
  d.shape = [](const RelInst& i) { return shape_of({i.x.src().size(), i.x.dst().size()}); };
  d.check = [check = std::move(check)](const RelInst& i, std::size_t cap) {
    return check(i.x, cap);
  };
  d.to_workspace = [](const RelInst& i) {
    Workspace ws;
    ws.add_relation("x", i.x);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) { return RelInst{ws.relation("x")}; };
  return d;
}

LawDefinition<SetInst> mem_subset_law(LawInfo info) {
  LawDefinition<SetInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) { return static_cast<std::uint64_t>(dims[0] + 1); };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const SetInst&, const std::string&)>& visit) {
    for (std::size_t m = 0; m <= dims[0]; ++m) {
      if (!visit(SetInst{carrier("M", "m", m)}, std::to_string(m))) return;
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    return SetInst{carrier("M", "m", draw(rng, dims[0]))};
  };
  d.shape = [](const SetInst& i) { return std::to_string(i.M.size()); };
  d.check = [name = d.info.name](const SetInst& i, std::size_t cap) {
    auto pw = powerset(i.M, cap);
    return LawOutcome{
        equality_violation(name, left_residual(pw->mem, pw->mem), subset_order(*pw)), {}};
  };
  d.to_workspace = [](const SetInst& i) {
    Workspace ws;
    ws.add_set(i.M);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) { return SetInst{ws.set("M")}; };
  return d;
}

LawDefinition<PromInst> prom_law(LawInfo info,
                                 std::function<LawOutcome(const Prom&, std::size_t)> check) {
  LawDefinition<PromInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) { return prom_bound(dims[0], dims[1]); };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const PromInst&, const std::string&)>& visit) {
    for_each_prom(dims, [&](const Prom& p, const Sizes& s) {
      return visit(PromInst{p}, shape_of(s));
    });
  };
  d.generate = [](Rng& rng, const Sizes& dims) { return PromInst{random_prom(rng, dims)}; };
  d.shape = [](const PromInst& i) { return prom_shape(i.p); };
  d.check = [check = std::move(check)](const PromInst& i, std::size_t cap) {
    return check(i.p, cap);
  };
  d.to_workspace = [](const PromInst& i) {
    Workspace ws;
    ws.add_prom("p", i.p);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) { return PromInst{valid_prom(ws, "p")}; };
  return d;
}

LawDefinition<RepInst> rep_law(LawInfo info,
                               std::function<LawOutcome(const Representation&, std::size_t)> check) {
  LawDefinition<RepInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) { return rep_bound(dims[0], dims[1]); };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const RepInst&, const std::string&)>& visit) {
    for_each_rep(dims, [&](const Representation& r, const Sizes& s) {
      return visit(RepInst{r}, shape_of(s));
    });
  };
  d.generate = [](Rng& rng, const Sizes& dims) { return RepInst{random_rep(rng, dims)}; };
  d.shape = [](const RepInst& i) { return rep_shape(i.r); };
  d.check = [check = std::move(check)](const RepInst& i, std::size_t cap) {
    return check(i.r, cap);
  };
  d.to_workspace = [](const RepInst& i) {
    Workspace ws;
    ws.add_representation("R", i.r);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) { return RepInst{valid_rep(ws, "R")}; };
  return d;
}

std::uint64_t prom_morphism_bound(const Sizes& dims) {
  const std::uint64_t n = prom_bound(dims[0], dims[1]);
  return sat_mul(sat_mul(n, n), sat_mul(sat_pow(dims[0], dims[0]), sat_pow(dims[1], dims[1])));
}

std::uint64_t rep_morphism_bound(const Sizes& dims) {
  const std::uint64_t n = rep_bound(dims[0], dims[1]);
  return sat_mul(sat_mul(n, n), sat_mul(sat_pow(dims[1], dims[1]), pow2(dims[0] * dims[0])));
}

LawDefinition<PromMorInst> prom_morphism_law(
    LawInfo info, std::function<LawOutcome(const PromMorphism&, std::size_t)> check) {
  LawDefinition<PromMorInst> d;
  d.info = std::move(info);
  d.estimate = prom_morphism_bound;
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const PromMorInst&, const std::string&)>& visit) {
    const auto proms = proms_upto(dims);
    for (const auto& p : proms) {
      for (const auto& q : proms) {
        const std::string shape = prom_shape(p) + "->" + prom_shape(q);
        for (const auto& m : enumerate_prom_morphisms(p, q)) {
          if (!visit(PromMorInst{m}, shape)) return;
        }
      }
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    return PromMorInst{gen_prom_morphism(rng, MorphismBounds{dims[0], dims[1]})};
  };
  d.shape = [](const PromMorInst& i) { return prom_shape(i.m.src) + "->" + prom_shape(i.m.dst); };
  d.check = [check = std::move(check)](const PromMorInst& i, std::size_t cap) {
    return check(i.m, cap);
  };
  d.to_workspace = [](const PromMorInst& i) { return ws_of(i); };
  d.from_workspace = prom_mor_of;
  return d;
}

LawDefinition<RepMorInst> rep_morphism_law(
    LawInfo info, std::function<LawOutcome(const RepMorphism&, std::size_t)> check) {
  LawDefinition<RepMorInst> d;
  d.info = std::move(info);
  d.estimate = rep_morphism_bound;
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const RepMorInst&, const std::string&)>& visit) {
    const auto reps = reps_upto(dims);
    for (const auto& r : reps) {
      for (const auto& q : reps) {
        const std::string shape = rep_shape(r) + "->" + rep_shape(q);
        for (const auto& m : enumerate_rep_morphisms(r, q)) {
          if (!visit(RepMorInst{m}, shape)) return;
        }
      }
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    Representation src = random_rep(rng, dims);
    return RepMorInst{random_rep_morphism_from(rng, src, dims)};
  };
  d.shape = [](const RepMorInst& i) { return rep_shape(i.m.src) + "->" + rep_shape(i.m.dst); };
  d.check = [check = std::move(check)](const RepMorInst& i, std::size_t cap) {
    return check(i.m, cap);
  };
  d.to_workspace = [](const RepMorInst& i) { return ws_of(i); };
  d.from_workspace = rep_mor_of;
  return d;
}

LawDefinition<PromMorPair> lemma3_law(LawInfo info) {
  LawDefinition<PromMorPair> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    return sat_mul(prom_morphism_bound(dims), prom_bound(dims[0], dims[1]));
  };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const PromMorPair&, const std::string&)>& visit) {
    const auto proms = proms_upto(dims);
    const std::size_t n = proms.size();
    std::vector<std::vector<std::vector<PromMorphism>>> hom(n, std::vector<std::vector<PromMorphism>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) hom[i][j] = enumerate_prom_morphisms(proms[i], proms[j]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const std::string shape =
              prom_shape(proms[i]) + "->" + prom_shape(proms[j]) + "->" + prom_shape(proms[k]);
          for (const auto& m1 : hom[i][j])
            for (const auto& m2 : hom[j][k])
              if (!visit(PromMorPair{m1, m2}, shape)) return;
        }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    const MorphismBounds bounds{dims[0], dims[1]};
    PromMorphism m2 = gen_prom_morphism(rng, bounds);
    PromMorphism m1 = gen_prom_morphism_into(rng, m2.src, bounds);
    return PromMorPair{std::move(m1), std::move(m2)};
  };
  d.shape = [](const PromMorPair& i) {
    return prom_shape(i.m1.src) + "->" + prom_shape(i.m1.dst) + "->" + prom_shape(i.m2.dst);
  };
  d.check = [name = d.info.name](const PromMorPair& i, std::size_t) {
    LawOutcome out;
    const Prom& p = i.m1.src;
    const RepMorphism r_id = R_mor(identity_prom_morphism(p));
    const RepMorphism id = identity_rep_morphism(R_obj(p));
    if (!repmor_leq(id, r_id)) {
      out.violation = Violation{name + ": id ⩽ R(id)", {}};
      return out;
    }
    if (!eq(r_id.tau, id.tau)) out.tags.push_back("strict-identity");
    const RepMorphism lhs = R_mor(compose_prom_morphisms(i.m2, i.m1));
    const RepMorphism rhs = compose_rep_morphisms(R_mor(i.m2), R_mor(i.m1));
    if (!repmor_leq(lhs, rhs)) {
      auto v = lhs.phi == rhs.phi ? inclusion_violation(name + ": R(m2∘m1) ⩽ R(m2)∘R(m1)",
                                                        lhs.tau, rhs.tau)
                                  : std::optional<Violation>(fail(name + ": first components differ"));
      out.violation = v ? v : fail(name);
      return out;
    }
    if (!eq(lhs.tau, rhs.tau)) out.tags.push_back("strict-composition");
    return out;
  };
  d.to_workspace = [](const PromMorPair& i) {
    Workspace ws;
    ws.add_prom_morphism("m1", i.m1, "p", "p'");
    ws.add_prom_morphism("m2", i.m2, "p'", "p''");
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) {
    PromMorPair i{valid_prom_morphism(ws, "m1"), valid_prom_morphism(ws, "m2")};
    if (!same_prom(i.m1.dst, i.m2.src)) invalid_instance("m1 and m2 are not composable");
    return i;
  };
  return d;
}

LawDefinition<RepMorPair> lemma6_law(LawInfo info) {
  LawDefinition<RepMorPair> d;
  d.info = std::move(info);
  d.estimate = rep_morphism_bound;
  d.enumerate = [](const Sizes& dims, std::size_t cap,
                   const std::function<bool(const RepMorPair&, const std::string&)>& visit) {
    const auto reps = reps_upto(dims);
    const std::size_t n = reps.size();
    std::vector<std::shared_ptr<const Prom>> images;
    for (const auto& r : reps) images.push_back(std::make_shared<const Prom>(M_obj(r, cap)));
    using Entry = std::pair<std::shared_ptr<const RepMorphism>, std::shared_ptr<const PromMorphism>>;
    std::vector<std::vector<std::vector<Entry>>> hom(n, std::vector<std::vector<Entry>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (auto& m : enumerate_rep_morphisms(reps[i], reps[j])) {
          auto image = std::make_shared<const PromMorphism>(M_mor(m, *images[i], *images[j], cap));
          hom[i][j].emplace_back(std::make_shared<const RepMorphism>(std::move(m)), std::move(image));
        }
    for (std::size_t i = 0; i < n; ++i) {
      bool first = true;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (hom[i][j].empty() || hom[j][k].empty()) continue;
          const std::string shape =
              rep_shape(reps[i]) + "->" + rep_shape(reps[j]) + "->" + rep_shape(reps[k]);
          for (const auto& [m1, image1] : hom[i][j])
            for (const auto& [m2, image2] : hom[j][k]) {
              RepMorPair pair{m1, m2, image1, image2, first};
              first = false;
              if (!visit(pair, shape)) return;
            }
        }
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    Representation mid = random_rep(rng, dims, "M'", "S'");
    RepMorphism m1 = random_rep_morphism_into(rng, mid, dims);
    RepMorphism m2 = random_rep_morphism_from(rng, mid, dims);
    return RepMorPair{std::make_shared<const RepMorphism>(std::move(m1)),
                      std::make_shared<const RepMorphism>(std::move(m2))};
  };
  d.shape = [](const RepMorPair& i) {
    return rep_shape(i.m1->src) + "->" + rep_shape(i.m1->dst) + "->" + rep_shape(i.m2->dst);
  };
  d.check = [name = d.info.name](const RepMorPair& i, std::size_t cap) {
    LawOutcome out;
    const RepMorphism& m1 = *i.m1;
    const RepMorphism& m2 = *i.m2;
    const PromMorphism image1 = i.image1 ? *i.image1 : M_mor(m1, cap);
    const PromMorphism image2 = i.image2 ? *i.image2 : M_mor(m2, cap);
    if (i.check_identity) {
      const Representation& r = m1.src;
      if (auto v = prom_morphisms_equal(name + ": M(id) = id",
                                        M_mor(identity_rep_morphism(r), image1.src, image1.src, cap),
                                        identity_prom_morphism(image1.src), *powerset(r.M, cap))) {
        out.violation = v;
        return out;
      }
      out.tags.push_back("identity");
    }
    out.violation = prom_morphisms_equal(
        name + ": M(m2∘m1) = M(m2)∘M(m1)",
        M_mor(compose_rep_morphisms(m2, m1), image1.src, image2.dst, cap),
        compose_prom_morphisms(image2, image1), *powerset(m2.dst.M, cap));
    return out;
  };
  d.to_workspace = [](const RepMorPair& i) {
    Workspace ws;
    ws.add_rep_morphism("m1", *i.m1, "R", "R'");
    ws.add_rep_morphism("m2", *i.m2, "R'", "R''");
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) {
    RepMorPair i{std::make_shared<const RepMorphism>(valid_rep_morphism(ws, "m1")),
                 std::make_shared<const RepMorphism>(valid_rep_morphism(ws, "m2"))};
    if (!same_representation(i.m1->dst, i.m2->src)) {
      invalid_instance("m1 and m2 are not composable");
    }
    return i;
  };
  return d;
}

LawDefinition<GaloisInst> galois_connection_law(
    LawInfo info, std::function<LawOutcome(const GaloisInst&, std::size_t)> check) {
  LawDefinition<GaloisInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    const std::uint64_t pairs =
        sat_mul(prom_bound(dims[0], dims[1]), rep_bound(dims[2], dims[3]));
    const std::uint64_t per_pair = sat_mul(sat_pow(dims[3], dims[0]), 2 * pow2(dims[2] * dims[1]));
    return sat_mul(pairs, per_pair);
  };
  d.enumerate = [](const Sizes& dims, std::size_t cap,
                   const std::function<bool(const GaloisInst&, const std::string&)>& visit) {
    const auto proms = proms_upto({dims[0], dims[1]});
    const auto reps = reps_upto({dims[2], dims[3]});
    for (const auto& p : proms) {
      const Representation rp = R_obj(p);
      for (const auto& r : reps) {
        const std::string shape = prom_shape(p) + "|" + rep_shape(r);
        for (const auto& m : enumerate_rep_morphisms(rp, r)) {
          if (!visit(GaloisInst{p, r, m, std::nullopt}, shape)) return;
        }
        for (const auto& n : enumerate_prom_morphisms(p, M_obj(r, cap))) {
          if (!visit(GaloisInst{p, r, std::nullopt, n}, shape)) return;
        }
      }
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      Prom p = random_prom(rng, {dims[0], dims[1]});
      Representation r = random_rep(rng, {dims[2], dims[3]});
      if (rng.chance(0.5)) {
        if (auto m = pick_rep_morphism(rng, R_obj(p), r)) {
          return GaloisInst{p, r, *m, std::nullopt};
        }
      } else {
        auto ns = enumerate_prom_morphisms(p, M_obj(r));
        if (!ns.empty()) return GaloisInst{p, r, std::nullopt, ns[rng.below(ns.size())]};
      }
    }
    // With A empty the constant-∅ map is always a morphism p → M(R).
    Prom p = gen_prom(rng, carrier("A", "a", 0), carrier("B", "b", draw(rng, dims[1])));
    Representation r = random_rep(rng, {dims[2], dims[3]});
    auto ns = enumerate_prom_morphisms(p, M_obj(r));
    return GaloisInst{p, r, std::nullopt, ns.front()};
  };
  d.shape = [](const GaloisInst& g) { return prom_shape(g.p) + "|" + rep_shape(g.r); };
  d.check = std::move(check);
  d.to_workspace = [](const GaloisInst& g) { return ws_of(g); };
  d.from_workspace = galois_of;
  return d;
}

LawDefinition<PsiInst> psi_law(LawInfo info) {
  LawDefinition<PsiInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    return sum_over(dims, [](const Sizes& s) {
      return sat_mul(pow2(s[0] * s[1]), preorder_count(s[1]));
    });
  };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const PsiInst&, const std::string&)>& visit) {
    for (const auto& s : size_tuples(dims)) {
      FinSet M = carrier("M", "m", s[0]);
      FinSet B = carrier("B", "b", s[1]);
      const auto ys = all_preorders(B);
      const std::string shape = shape_of(s);
      for (const auto& tau : all_relations(M, B))
        for (const auto& y : ys)
          if (!visit(PsiInst{tau, y}, shape)) return;
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    FinSet M = carrier("M", "m", draw(rng, dims[0]));
    FinSet B = carrier("B", "b", draw(rng, dims[1]));
    return PsiInst{random_relation(rng, M, B, 0.5), gen_preorder(rng, B).rel};
  };
  d.shape = [](const PsiInst& i) { return shape_of({i.tau.src().size(), i.tau.dst().size()}); };
  d.check = [name = d.info.name](const PsiInst& i, std::size_t cap) {
    LawOutcome out;
    const FinSet& M = i.tau.src();
    auto pw = powerset(M, cap);
    const FnMap ps = psi(i.tau, i.y, cap);
    const Rel ty = compose(i.tau, i.y);
    if ((out.violation = equality_violation(name + ": ∈⨾(Ψτ)^* = τ⨾y",
                                            compose(pw->mem, graph_upper(ps)), ty))) {
      return out;
    }
    const Rel t = tee(M, ps, cap);
    if ((out.violation = equality_violation(name + ": T(Ψτ) = τ⨾y", t, ty))) return out;
    if ((out.violation = inclusion_violation(name + ": τ ≤ T(Ψτ)", i.tau, t))) return out;
    out.violation = powerset_map_equal(name + ": Ψ(T(Ψτ)) = Ψτ", *pw, psi(t, i.y, cap), ps);
    if (!eq(t, i.tau)) out.tags.push_back("strict");
    return out;
  };
  d.to_workspace = [](const PsiInst& i) {
    Workspace ws;
    ws.add_relation("tau", i.tau);
    ws.add_relation("y", i.y);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) {
    PsiInst i{ws.relation("tau"), valid_preorder_rel(ws, "y")};
    if (!(i.tau.dst() == i.y.src())) invalid_instance("tau must target the carrier of y");
    return i;
  };
  return d;
}

LawDefinition<SoundInst> soundness_law(LawInfo info) {
  LawDefinition<SoundInst> d;
  d.info = std::move(info);
  d.estimate = [](const Sizes& dims) {
    return sum_over(dims, [](const Sizes& s) {
      return sat_mul(pow2(s[0] * s[1]), preorder_count(s[1]));
    });
  };
  d.enumerate = [](const Sizes& dims, std::size_t,
                   const std::function<bool(const SoundInst&, const std::string&)>& visit) {
    for (const auto& s : size_tuples(dims)) {
      FinSet M = carrier("M", "m", s[0]);
      FinSet S = carrier("S", "s", s[1]);
      const auto ords = all_preorders(S);
      const std::string shape = shape_of(s);
      for (const auto& sat : all_relations(M, S))
        for (const auto& ord : ords)
          if (!visit(SoundInst{sat, ord}, shape)) return;
    }
  };
  d.generate = [](Rng& rng, const Sizes& dims) {
    FinSet M = carrier("M", "m", draw(rng, dims[0]));
    FinSet S = carrier("S", "s", draw(rng, dims[1]));
    return SoundInst{random_relation(rng, M, S, 0.5), gen_preorder(rng, S).rel};
  };
  d.shape = [](const SoundInst& i) { return shape_of({i.sat.src().size(), i.sat.dst().size()}); };
  d.check = [name = d.info.name](const SoundInst& i, std::size_t) {
    LawOutcome out;
    const Rel entail = left_residual(i.sat, i.sat);
    const bool sound = leq(compose(i.sat, i.ord), i.sat);
    const bool below = leq(i.ord, entail);
    out.tags.push_back(sound ? "sound" : "unsound");
    if (sound != below) {
      out.violation = sound ? inclusion_violation(name, i.ord, entail)
                            : inclusion_violation(name, compose(i.sat, i.ord), i.sat);
      if (!out.violation) out.violation = fail(name);
      return out;
    }
    if (sound && leq(entail, i.ord)) {
      out.tags.push_back("exact");
      out.violation = equality_violation(name + ": exact ⇒ ⊨\\⊨ = ≤", entail, i.ord);
    }
    return out;
  };
  d.to_workspace = [](const SoundInst& i) {
    Workspace ws;
    ws.add_relation("sat", i.sat);
    ws.add_relation("ord", i.ord);
    return ws;
  };
  d.from_workspace = [](const Workspace& ws) {
    SoundInst i{ws.relation("sat"), valid_preorder_rel(ws, "ord")};
    if (!(i.sat.dst() == i.ord.src())) invalid_instance("sat must target the carrier of ord");
    return i;
  };
  return d;
}

// --- checks of the individual lemmas ------------------------------------------

LawOutcome check_preorder_axiom(const Rel& x, const std::string& name) {
  LawOutcome out;
  const Rel r = left_residual(x, x);
  if ((out.violation = first_failure(check_preorder(r), name + ": x\\x is a preorder: "))) {
    return out;
  }
  if ((out.violation = equality_violation(name + ": (x\\x)\\(x\\x) = x\\x", left_residual(r, r), r))) {
    return out;
  }
  if (x.src() == x.dst()) {
    const bool pre = is_preorder(x);
    if (pre) out.tags.push_back("preorder");
    if (pre != eq(x, r)) out.violation = fail(name + ": preorder ⇔ x = x\\x");
  }
  return out;
}

LawOutcome check_lemma7(const Rel& x, const std::string& name, std::size_t cap) {
  return LawOutcome{equality_violation(name, mem_residual_recover(x, cap), x), {}};
}

LawOutcome check_lemma1(const Prom& p, const std::string& name) {
  return LawOutcome{first_failure(check_representation(R_obj(p)), name + ": R(p) "), {}};
}

LawOutcome check_lemma4(const Representation& r, const std::string& name, std::size_t cap) {
  return LawOutcome{first_failure(check_prom(M_obj(r, cap)), name + ": M(R) "), {}};
}

LawOutcome check_lemma10(const Representation& r, const std::string& name, std::size_t cap) {
  LawOutcome out;
  const bool exact = is_exact(r);
  out.tags.push_back(exact ? "exact" : "non-exact");
  if (exact != is_order_reflecting(M_obj(r, cap))) {
    out.violation = fail(name + ": exact ⇔ M(R) order-reflecting");
    return out;
  }
  if (exact) {
    out.violation =
        equality_violation(name + ": exact ⇒ ⊨\\⊨ = ≤", left_residual(r.sat, r.sat), r.ord);
  }
  return out;
}

LawOutcome check_lemma11(const Prom& p, const std::string& name) {
  LawOutcome out;
  const bool reflecting = is_order_reflecting(p);
  out.tags.push_back(reflecting ? "order-reflecting" : "non-reflecting");
  if (reflecting != is_exact(R_obj(p))) {
    out.violation = fail(name + ": order-reflecting ⇔ R(p) exact");
    return out;
  }
  if (reflecting) {
    out.violation =
        equality_violation(name + ": reflecting ⇒ x = f_*⨾y⨾f^*", p.x, pullback_order(p.y, p.f));
  }
  return out;
}

LawOutcome check_triangle_repr(const Prom& p, const std::string& name, std::size_t cap) {
  LawOutcome out;
  const TriangleRepr t = triangle_repr(p, cap);
  if (!t.equals_y) {
    out.violation = equality_violation(name + ": ε∘R(η) = (id, y)", t.composite.tau, p.y);
    if (!out.violation) out.violation = fail(name + ": ε∘R(η) = (id, y)");
    return out;
  }
  if (!t.above_identity) {
    out.violation = fail(name + ": id ⩽ ε∘R(η)");
    return out;
  }
  auto pw = powerset(p.B, cap);
  const Rel mem_y = left_residual(pw->mem, p.y);
  if ((out.violation = inclusion_violation(name + ": (∈\\y)⨾y ≤ ∈\\y", compose(mem_y, p.y), mem_y))) {
    return out;
  }
  if (t.strict) out.tags.push_back("strict");
  return out;
}

LawOutcome check_triangle_pom(const Representation& r, const std::string& name, std::size_t cap) {
  LawOutcome out;
  auto pw = powerset(r.M, cap);
  if (!triangle_pom(r, cap)) {
    out.violation = powerset_map_equal(name, *pw, triangle_pom_map(r, cap),
                                       FnMap::identity(pw->carrier));
    if (!out.violation) out.violation = fail(name);
    return out;
  }
  if (triangle_pom_map(r, cap) != FnMap::identity(pw->carrier)) {
    out.violation = fail(name + ": equality routes disagree");
    return out;
  }
  // Cross-check through the general constructions when 2^(2^M) fits.
  if (pw->carrier.size() <= cap) {
    const Prom mr = M_obj(r, cap);
    const PromMorphism composite =
        compose_prom_morphisms(M_mor(counit(r, cap), cap), unit(mr, cap));
    out.violation = prom_morphisms_equal(name + ": M(ε)∘η = id (materialized)", composite,
                                         identity_prom_morphism(mr), *pw);
    out.tags.push_back("materialized");
  }
  return out;
}

LawOutcome check_unit_natural(const PromMorphism& m, const std::string& name, std::size_t cap) {
  LawOutcome out;
  const PromMorphism up = unit(m.src, cap);
  const PromMorphism uq = unit(m.dst, cap);
  if ((out.violation = first_failure(check_prom_morphism(up), name + ": η_p "))) return out;
  if ((out.violation = first_failure(check_prom_morphism(uq), name + ": η_q "))) return out;
  auto pw = powerset(m.dst.B, cap);
  out.violation = prom_morphisms_equal(name + ": η∘(φ,ψ) = MR(φ,ψ)∘η",
                                       compose_prom_morphisms(uq, m),
                                       compose_prom_morphisms(M_mor(R_mor(m), cap), up), *pw);
  if (out.violation) return out;
  const Rel lhs = compose(m.dst.y, graph_upper(m.psi));
  out.violation = equality_violation(name + ": y'⨾ψ^* = y'⨾ψ^*⨾y", lhs, compose(lhs, m.src.y));
  return out;
}

LawOutcome check_counit_natural(const RepMorphism& m, const std::string& name, std::size_t cap) {
  LawOutcome out;
  const RepMorphism cr = counit(m.src, cap);
  const RepMorphism cq = counit(m.dst, cap);
  if ((out.violation = first_failure(check_rep_morphism(cr), name + ": ε_R "))) return out;
  if ((out.violation = first_failure(check_rep_morphism(cq), name + ": ε_R' "))) return out;
  out.violation = rep_morphisms_equal(name + ": ε∘RM(φ,τ) = (φ,τ)∘ε",
                                      compose_rep_morphisms(cq, R_mor(M_mor(m, cap))),
                                      compose_rep_morphisms(m, cr));
  return out;
}

LawOutcome check_lemma8(const GaloisInst& g, const std::string& name, std::size_t cap) {
  LawOutcome out;
  if (g.rep_side) {
    out.violation = first_failure(check_prom_morphism(galois_lift(g.p, g.r, *g.rep_side, cap)),
                                  name + ": Ψ(φ,τ) ");
    out.tags.push_back("lift");
  } else {
    out.violation = first_failure(check_rep_morphism(galois_lower(g.p, g.r, *g.prom_side, cap)),
                                  name + ": T(φ,ψ) ");
    out.tags.push_back("lower");
  }
  return out;
}

LawOutcome check_lemma9(const GaloisInst& g, const std::string& name, std::size_t cap) {
  LawOutcome out;
  if (g.prom_side) {
    auto pw = powerset(g.r.M, cap);
    const PromMorphism round =
        galois_lift(g.p, g.r, galois_lower(g.p, g.r, *g.prom_side, cap), cap);
    out.violation = prom_morphisms_equal(name + ": ΨT(φ,ψ) = (φ,ψ)", round, *g.prom_side, *pw);
    out.tags.push_back("lower-lift");
    return out;
  }
  const RepMorphism& m = *g.rep_side;
  const RepMorphism round = galois_lower(g.p, g.r, galois_lift(g.p, g.r, m, cap), cap);
  out.tags.push_back("lift-lower");
  if (!repmor_leq(m, round)) {
    out.violation = m.phi == round.phi
                        ? inclusion_violation(name + ": (φ,τ) ⩽ TΨ(φ,τ)", m.tau, round.tau)
                        : std::optional<Violation>(fail(name + ": first components differ"));
    if (!out.violation) out.violation = fail(name);
    return out;
  }
  if (!eq(m.tau, round.tau)) out.tags.push_back("strict");
  return out;
}

// --- catalog ------------------------------------------------------------------------

struct Registry {
  std::vector<LawInfo> infos;
  std::vector<std::unique_ptr<LawRunner>> runners;
};

const char* noun_of(LawId id) {
  switch (id) {
    case LawId::Eq1Galois:
    case LawId::DualGalois: return "triples";
    case LawId::PreorderSingleAxiom:
    case LawId::Lemma7:
    case LawId::PsiCharacterization:
    case LawId::SoundnessResidualEquiv: return "relations";
    case LawId::MemResidualSubset: return "sets";
    case LawId::Lemma1:
    case LawId::Lemma11:
    case LawId::TriangleRepr: return "proms";
    case LawId::Lemma2:
    case LawId::UnitNatural: return "prom morphisms";
    case LawId::Lemma4:
    case LawId::Lemma10:
    case LawId::TrianglePom: return "representations";
    case LawId::Lemma5:
    case LawId::CounitNatural: return "representation morphisms";
    case LawId::Lemma3:
    case LawId::Lemma6: return "composable pairs";
    case LawId::Lemma8:
    case LawId::Lemma9: return "hom-set elements";
    case LawId::ModularTautology: break;
  }
  return "instances";
}

LawInfo info(LawId id, std::string name, std::string citation, std::vector<std::string> dims,
             Sizes exhaustive, Sizes seeded) {
  return LawInfo{id,
                 std::move(name),
                 std::move(citation),
                 std::move(dims),
                 std::move(exhaustive),
                 std::move(seeded),
                 noun_of(id)};
}

Registry build_registry() {
  Registry reg;
  auto add = [&](auto def) {
    reg.infos.push_back(def.info);
    reg.runners.push_back(make_runner(std::move(def)));
  };
  add(galois_law(info(LawId::Eq1Galois, "eq1-galois",
                      "y ≤ x\\z ⇔ x⨾y ≤ z", {"A", "B", "C"}, {2, 2, 2}, {3, 3, 3}),
                 false));
  add(galois_law(info(LawId::DualGalois, "dual-galois",
                      "dual residual: x ≤ z/y ⇔ x⨾y ≤ z", {"A", "B", "C"}, {2, 2, 2}, {3, 3, 3}),
                 true));
  add(modular_law(info(LawId::ModularTautology, "modular-tautology",
                       "f_*⨾(x\\y)⨾g^* = (x⨾f^*)\\(y⨾g^*)", {"A", "B", "C", "D", "E"},
                       {2, 2, 2, 2, 2}, {3, 3, 3, 3, 3})));
  {
    const std::string name = "preorder-single-axiom";
    add(single_relation_law(
        info(LawId::PreorderSingleAxiom, name,
             "x = x\\x defines preorders; (x\\x)\\(x\\x) = x\\x", {"A", "B"}, {2, 2}, {4, 4}),
        [name](const Rel& x, std::size_t) { return check_preorder_axiom(x, name); }));
  }
  add(mem_subset_law(info(LawId::MemResidualSubset, "mem-residual-subset",
                          "∈\\∈ = ⊆", {"M"}, {3}, {6})));
  add(prom_law(info(LawId::Lemma1, "lemma1", "R(p) is a representation (Lemma 1)",
                    {"A", "B"}, {2, 2}, {4, 4}),
               [](const Prom& p, std::size_t) { return check_lemma1(p, "lemma1"); }));
  add(prom_morphism_law(
      info(LawId::Lemma2, "lemma2", "R(φ,ψ) is a representation morphism (Lemma 2)",
           {"A", "B"}, {2, 2}, {4, 4}),
      [](const PromMorphism& m, std::size_t) {
        return LawOutcome{first_failure(check_rep_morphism(R_mor(m)), "lemma2: R(φ,ψ) "), {}};
      }));
  add(lemma3_law(info(LawId::Lemma3, "lemma3",
                      "id ⩽ R(id) and R(m2∘m1) ⩽ R(m2)∘R(m1) (Lemma 3)", {"A", "B"}, {1, 1},
                      {3, 3})));
  add(rep_law(info(LawId::Lemma4, "lemma4", "M(R) is a prom (Lemma 4)", {"M", "S"}, {2, 2},
                   {4, 4}),
              [](const Representation& r, std::size_t cap) {
                return check_lemma4(r, "lemma4", cap);
              }));
  add(rep_morphism_law(
      info(LawId::Lemma5, "lemma5", "M(φ,τ) is a prom morphism (Lemma 5)", {"M", "S"}, {2, 2},
           {3, 3}),
      [](const RepMorphism& m, std::size_t cap) {
        return LawOutcome{first_failure(check_prom_morphism(M_mor(m, cap)), "lemma5: M(φ,τ) "),
                          {}};
      }));
  add(lemma6_law(info(LawId::Lemma6, "lemma6",
                      "M(id) = id and M(m2∘m1) = M(m2)∘M(m1) (Lemma 6)", {"M", "S"}, {2, 2},
                      {3, 3})));
  {
    const std::string name = "lemma7";
    add(single_relation_law(info(LawId::Lemma7, name, "x = ∈⨾(∈\\x) (Lemma 7)", {"A", "B"},
                                 {2, 3}, {4, 4}),
                            [name](const Rel& x, std::size_t cap) {
                              return check_lemma7(x, name, cap);
                            }));
  }
  add(galois_connection_law(
      info(LawId::Lemma8, "lemma8", "Ψ(φ,τ) and T(φ,ψ) are morphisms (Lemma 8)",
           {"A", "B", "M", "S"}, {2, 2, 2, 2}, {3, 3, 3, 3}),
      [](const GaloisInst& g, std::size_t cap) { return check_lemma8(g, "lemma8", cap); }));
  add(galois_connection_law(
      info(LawId::Lemma9, "lemma9", "ΨT(φ,ψ) = (φ,ψ) and (φ,τ) ⩽ TΨ(φ,τ) (Lemma 9)",
           {"A", "B", "M", "S"}, {2, 2, 2, 2}, {3, 3, 3, 3}),
      [](const GaloisInst& g, std::size_t cap) { return check_lemma9(g, "lemma9", cap); }));
  add(rep_law(info(LawId::Lemma10, "lemma10", "R exact ⇔ M(R) order-reflecting (Lemma 10)",
                   {"M", "S"}, {2, 2}, {4, 4}),
              [](const Representation& r, std::size_t cap) {
                return check_lemma10(r, "lemma10", cap);
              }));
  add(prom_law(info(LawId::Lemma11, "lemma11", "p order-reflecting ⇔ R(p) exact (Lemma 11)",
                    {"A", "B"}, {2, 2}, {4, 4}),
               [](const Prom& p, std::size_t) { return check_lemma11(p, "lemma11"); }));
  add(prom_law(info(LawId::TriangleRepr, "triangle-repr",
                    "ε_{R(p)}∘R(η_p) = (id_A, y) ⩾ (id_A, 1_B)", {"A", "B"}, {2, 2}, {4, 4}),
               [](const Prom& p, std::size_t cap) {
                 return check_triangle_repr(p, "triangle-repr", cap);
               }));
  add(rep_law(info(LawId::TrianglePom, "triangle-pom", "M(ε_R)∘η_{M(R)} = id_{M(R)}",
                   {"M", "S"}, {3, 2}, {3, 3}),
              [](const Representation& r, std::size_t cap) {
                return check_triangle_pom(r, "triangle-pom", cap);
              }));
  add(prom_morphism_law(
      info(LawId::UnitNatural, "unit-natural",
           "η is a prom morphism and η∘(φ,ψ) = M(R(φ,ψ))∘η", {"A", "B"}, {2, 2}, {3, 3}),
      [](const PromMorphism& m, std::size_t cap) {
        return check_unit_natural(m, "unit-natural", cap);
      }));
  add(rep_morphism_law(
      info(LawId::CounitNatural, "counit-natural",
           "ε is a representation morphism and ε∘R(M(φ,τ)) = (φ,τ)∘ε", {"M", "S"}, {2, 2},
           {3, 3}),
      [](const RepMorphism& m, std::size_t cap) {
        return check_counit_natural(m, "counit-natural", cap);
      }));
  add(psi_law(info(LawId::PsiCharacterization, "psi-characterization",
                   "∈⨾(Ψτ)^* = τ⨾y, T(Ψτ) = τ⨾y ⩾ τ, Ψ(Tψ) = ψ", {"M", "B"}, {2, 2}, {4, 4})));
  add(soundness_law(info(LawId::SoundnessResidualEquiv, "soundness-residual-equiv",
                         "⊨⨾≤ ≤ ⊨ ⇔ ≤ ≤ ⊨\\⊨", {"M", "S"}, {2, 2}, {4, 4})));
  return reg;
}

const Registry& registry() {
  static const Registry reg = build_registry();
  return reg;
}

}  // namespace

const std::vector<LawInfo>& law_catalog() { return registry().infos; }

const LawRunner& law_runner(LawId id) {
  return *registry().runners.at(static_cast<std::size_t>(id));
}

}  // namespace promrep
