#include "promrep/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace promrep {

// --- randomness ---------------------------------------------------------------

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

// --- generators -----------------------------------------------------------------

Rel random_relation(Rng& rng, const FinSet& src, const FinSet& dst, double p) {
  Rel r(src, dst);
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (rng.chance(p)) r.set(i, j);
    }
  }
  return r;
}

FnMap random_map(Rng& rng, const FinSet& src, const FinSet& dst) {
  if (dst.empty() && !src.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "no function from non-empty '" + src.name() + "' to empty '" +
                    dst.name() + "'");
  }
  std::vector<std::size_t> image(src.size());
  for (auto& v : image) v = rng.below(dst.size());
  return FnMap(src, dst, std::move(image));
}

namespace {

/// Random sub-relation of `bound` closed into a preorder. The result stays
/// below `bound` whenever `bound` is itself a preorder.
Rel random_preorder_below(Rng& rng, const Rel& bound) {
  Rel r(bound.src(), bound.dst());
  for (auto [i, j] : bound.pairs()) {
    if (rng.chance(kEdgeProbability)) r.set(i, j);
  }
  return preorder_closure(r).rel;
}

}  // namespace

Preorder gen_preorder(Rng& rng, const FinSet& carrier) {
  return preorder_closure(random_relation(rng, carrier, carrier));
}

Preorder gen_preorder(std::uint64_t seed, std::size_t size) {
  Rng rng(seed);
  return gen_preorder(rng, FinSet::indexed("A", "a", size));
}

Prom gen_prom(Rng& rng, const FinSet& A, const FinSet& B) {
  Rel y = gen_preorder(rng, B).rel;
  FnMap f = random_map(rng, A, B);
  Rel pullback = pullback_order(y, f);
  Rel x = rng.chance(0.5) ? std::move(pullback) : random_preorder_below(rng, pullback);
  return Prom{A, B, std::move(x), std::move(y), std::move(f)};
}

Prom gen_prom(std::uint64_t seed, std::size_t size_a, std::size_t size_b) {
  Rng rng(seed);
  return gen_prom(rng, FinSet::indexed("A", "a", size_a), FinSet::indexed("B", "b", size_b));
}

Representation gen_representation(Rng& rng, const FinSet& M, const FinSet& S) {
  Rel ord = gen_preorder(rng, S).rel;
  Rel sat = compose(random_relation(rng, M, S), ord);
  return Representation{M, S, std::move(sat), std::move(ord)};
}

Representation gen_representation(std::uint64_t seed, std::size_t size_m,
                                  std::size_t size_s) {
  Rng rng(seed);
  return gen_representation(rng, FinSet::indexed("M", "m", size_m),
                            FinSet::indexed("S", "s", size_s));
}

PromMorphism gen_prom_morphism_into(Rng& rng, const Prom& target,
                                    const MorphismBounds& bounds) {
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::size_t b = target.B.empty() ? 0 : rng.between(0, bounds.max_b);
    std::size_t a = (target.A.empty() || b == 0) ? 0 : rng.between(0, bounds.max_a);
    FinSet A = FinSet::indexed(target.A.name() + "'", "u", a);
    FinSet B = FinSet::indexed(target.B.name() + "'", "v", b);
    FnMap phi = random_map(rng, A, target.A);
    FnMap psi = random_map(rng, B, target.B);
    // f(a) must land in ψ⁻¹(f'(φ(a))) for the square to commute.
    std::vector<std::size_t> image(a);
    bool feasible = true;
    for (std::size_t i = 0; i < a && feasible; ++i) {
      std::vector<std::size_t> candidates;
      for (std::size_t j = 0; j < b; ++j) {
        if (psi(j) == target.f(phi(i))) candidates.push_back(j);
      }
      if (candidates.empty()) {
        feasible = false;
      } else {
        image[i] = candidates[rng.below(candidates.size())];
      }
    }
    if (!feasible) continue;
    FnMap f(A, B, std::move(image));
    Rel y = random_preorder_below(rng, pullback_order(target.y, psi));
    Rel x = random_preorder_below(
        rng, meet(pullback_order(target.x, phi), pullback_order(y, f)));
    PromMorphism m{Prom{A, B, std::move(x), std::move(y), std::move(f)}, target,
                   std::move(phi), std::move(psi)};
    if (check_prom_morphism(m).ok()) return m;
  }
  return identity_prom_morphism(target);
}

PromMorphism gen_prom_morphism(Rng& rng, const MorphismBounds& bounds) {
  std::size_t b = rng.between(0, bounds.max_b);
  std::size_t a = b == 0 ? 0 : rng.between(0, bounds.max_a);
  Prom target = gen_prom(rng, FinSet::indexed("A", "a", a), FinSet::indexed("B", "b", b));
  return gen_prom_morphism_into(rng, target, bounds);
}

PromMorphism gen_prom_morphism(std::uint64_t seed, const MorphismBounds& bounds) {
  Rng rng(seed);
  return gen_prom_morphism(rng, bounds);
}

std::optional<RepMorphism> pick_rep_morphism(Rng& rng, const Representation& src,
                                             const Representation& dst) {
  auto all = enumerate_rep_morphisms(src, dst);
  if (all.empty()) return std::nullopt;
  return all[rng.below(all.size())];
}

// --- enumeration ----------------------------------------------------------------

std::uint64_t preorder_count(std::size_t n) {
  static constexpr std::uint64_t counts[] = {1, 1, 4, 29, 355};
  if (n >= std::size(counts)) {
    throw Error(ErrorCode::BoundsExceeded, "preorders enumerable up to 4 elements");
  }
  return counts[n];
}

std::vector<Rel> all_relations(const FinSet& src, const FinSet& dst) {
  const std::size_t cells = src.size() * dst.size();
  if (cells > kMaxRelationCells) {
    throw Error(ErrorCode::BoundsExceeded,
                "relation enumeration limited to " + std::to_string(kMaxRelationCells) +
                    " cells, " + src.name() + "×" + dst.name() + " has " +
                    std::to_string(cells));
  }
  std::vector<Rel> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    out.push_back(Rel::from_code(src, dst, code));
  }
  return out;
}

std::vector<Rel> all_preorders(const FinSet& carrier) {
  std::vector<Rel> out;
  for (auto& r : all_relations(carrier, carrier)) {
    if (is_preorder(r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<FnMap> all_maps(const FinSet& src, const FinSet& dst) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < src.size(); ++i) {
    total *= dst.size();
    if (total > kMaxMorphismCandidates) {
      throw Error(ErrorCode::BoundsExceeded, "too many maps " + src.name() + " → " + dst.name());
    }
  }
  std::vector<FnMap> out;
  out.reserve(total);
  std::vector<std::size_t> image(src.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rest = k;
    for (auto& v : image) {
      v = rest % dst.size();
      rest /= dst.size();
    }
    out.emplace_back(src, dst, image);
  }
  return out;
}

namespace {

bool order_preserving(const Rel& x, const Rel& y, const FnMap& f) {
  const Rel fu = graph_upper(f);
  return leq(compose(fu, x), compose(y, fu));
}

}  // namespace

std::vector<Prom> all_proms(const FinSet& A, const FinSet& B) {
  const auto xs = all_preorders(A);
  const auto ys = all_preorders(B);
  const auto fs = all_maps(A, B);
  std::vector<Prom> out;
  for (const auto& y : ys) {
    for (const auto& x : xs) {
      for (const auto& f : fs) {
        if (order_preserving(x, y, f)) out.push_back(Prom{A, B, x, y, f});
      }
    }
  }
  return out;
}

std::vector<Representation> all_representations(const FinSet& M, const FinSet& S) {
  const auto ords = all_preorders(S);
  const auto sats = all_relations(M, S);
  std::vector<Representation> out;
  for (const auto& ord : ords) {
    for (const auto& sat : sats) {
      if (leq(compose(sat, ord), sat)) out.push_back(Representation{M, S, sat, ord});
    }
  }
  return out;
}

std::vector<PromMorphism> enumerate_prom_morphisms(const Prom& src, const Prom& dst) {
  const auto phis = all_maps(src.A, dst.A);
  const auto psis = all_maps(src.B, dst.B);
  if (phis.size() * psis.size() > kMaxMorphismCandidates) {
    throw Error(ErrorCode::BoundsExceeded, "prom morphism enumeration too large");
  }
  std::vector<PromMorphism> out;
  for (const auto& psi : psis) {
    if (!order_preserving(src.y, dst.y, psi)) continue;
    for (const auto& phi : phis) {
      if (!order_preserving(src.x, dst.x, phi)) continue;
      bool commutes = true;
      for (std::size_t a = 0; a < src.A.size() && commutes; ++a) {
        commutes = psi(src.f(a)) == dst.f(phi(a));
      }
      if (commutes) out.push_back(PromMorphism{src, dst, phi, psi});
    }
  }
  return out;
}

std::vector<RepMorphism> enumerate_rep_morphisms(const Representation& src,
                                                 const Representation& dst) {
  const std::size_t cells = dst.M.size() * src.M.size();
  if (cells > kMaxMorphismTauCells) {
    throw Error(ErrorCode::BoundsExceeded,
                "representation morphism enumeration limited to |M'×M| ≤ " +
                    std::to_string(kMaxMorphismTauCells));
  }
  const auto phis = all_maps(src.S, dst.S);
  std::vector<RepMorphism> out;
  for (const auto& phi : phis) {
    if (!order_preserving(src.ord, dst.ord, phi)) continue;
    const Rel rhs = compose(dst.sat, graph_upper(phi));
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
      Rel tau = Rel::from_code(dst.M, src.M, code);
      if (compose(tau, src.sat).same_bits(rhs)) {
        out.push_back(RepMorphism{src, dst, phi, std::move(tau)});
      }
    }
  }
  return out;
}

// --- laws: lookup -----------------------------------------------------------------

const LawInfo& law_info(LawId id) { return law_catalog().at(static_cast<std::size_t>(id)); }

std::optional<LawId> parse_law(std::string_view name) {
  for (const auto& info : law_catalog()) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

// --- witnesses -------------------------------------------------------------------

std::string Witness::to_json() const {
  using Json = nlohmann::ordered_json;
  Json doc = Json::object();
  doc["law"] = law_info(law).name;
  if (seed) {
    doc["seed"] = *seed;
  } else {
    doc["seed"] = "exhaustive";
  }
  doc["index"] = index;
  Json pairs = Json::array();
  for (const auto& [a, b] : violation.pairs) pairs.push_back(Json::array({a, b}));
  doc["violation"] = Json{{"axiom", violation.axiom}, {"pairs", std::move(pairs)}};
  doc["structures"] = Json::parse(structures.serialize());
  return doc.dump(2) + "\n";
}

Witness Witness::from_json(std::string_view text) {
  using Json = nlohmann::ordered_json;
  Json doc;
  try {
    doc = Json::parse(text);
    auto law = parse_law(doc.at("law").get<std::string>());
    if (!law) throw Error(ErrorCode::Parse, "unknown law in witness");
    Witness w{*law, std::nullopt, doc.at("index").get<std::uint64_t>(),
              Workspace::parse(doc.at("structures").dump()), {}};
    if (doc.at("seed").is_number_unsigned()) w.seed = doc.at("seed").get<std::uint64_t>();
    w.violation.axiom = doc.at("violation").at("axiom").get<std::string>();
    for (const auto& p : doc.at("violation").at("pairs")) {
      w.violation.pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
    return w;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed witness: ") + e.what());
  }
}

// --- summary ---------------------------------------------------------------------

namespace detail {

void tally(SearchSummary& summary, const std::string& shape, const LawOutcome& outcome) {
  ++summary.checked;
  ShapeTally& t = summary.shapes[shape];
  ++t.count;
  for (const auto& tag : outcome.tags) {
    ++t.tags[tag];
    ++summary.tags[tag];
  }
}

}  // namespace detail

std::uint64_t SearchSummary::tag(const std::string& name) const {
  auto it = tags.find(name);
  return it == tags.end() ? 0 : it->second;
}

namespace {

std::string join_sizes(const Sizes& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

std::string format_pairs(const Violation& v) {
  std::string out;
  for (const auto& [a, b] : v.pairs) out += " (" + a + "," + b + ")";
  return out;
}

}  // namespace

std::string SearchSummary::to_text(bool pretty) const {
  const LawInfo& info = law_info(law);
  std::ostringstream os;
  if (!pretty) {
    os << "law: " << info.name << "\n";
    os << "mode: " << (mode == SearchMode::Exhaustive ? "exhaustive" : "seeded") << "\n";
    os << "max_size: " << join_sizes(max_size) << "\n";
    if (mode == SearchMode::Seeded) {
      os << "seed: " << seed << "\n";
      os << "trials: " << trials << "\n";
    }
    os << "checked: " << checked << "\n";
    for (const auto& [shape, t] : shapes) {
      os << "shape " << shape << ": " << t.count << " " << info.noun << " checked";
      for (const auto& [tag, n] : t.tags) os << ", " << tag << "=" << n;
      os << "\n";
    }
    for (const auto& [tag, n] : tags) os << "tag " << tag << ": " << n << "\n";
    os << "witnesses: " << (witness ? 1 : 0) << "\n";
    if (witness) {
      os << "witness_index: " << witness->index << "\n";
      os << "violation: " << witness->violation.axiom << format_pairs(witness->violation)
         << "\n";
    }
    os << "result: " << (holds() ? "holds" : "refuted") << "\n";
    return os.str();
  }

  os << info.name << ": " << info.citation << "\n";
  os << "  mode " << (mode == SearchMode::Exhaustive ? "exhaustive" : "seeded")
     << ", bounds " << join_sizes(max_size) << " (" << [&] {
          std::string d;
          for (std::size_t i = 0; i < info.dims.size(); ++i) d += (i ? "," : "") + info.dims[i];
          return d;
        }() << ")";
  if (mode == SearchMode::Seeded) os << ", seed " << seed << ", " << trials << " trials";
  os << "\n\n";
  std::size_t width = 5;
  for (const auto& [shape, _] : shapes) width = std::max(width, shape.size());
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "shape" << "  "
     << std::right << std::setw(10) << "instances" << "  tags\n";
  for (const auto& [shape, t] : shapes) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << shape << "  "
       << std::right << std::setw(10) << t.count << "  ";
    bool first = true;
    for (const auto& [tag, n] : t.tags) {
      os << (first ? "" : ", ") << tag << "=" << n;
      first = false;
    }
    os << "\n";
  }
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "total" << "  "
     << std::right << std::setw(10) << checked << "\n\n";
  if (witness) {
    os << "  REFUTED at instance " << witness->index << ": " << witness->violation.axiom
       << format_pairs(witness->violation) << "\n";
  } else {
    os << "  holds on every instance\n";
  }
  return os.str();
}

// --- search ----------------------------------------------------------------------

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

namespace {

Sizes resolve_sizes(const LawInfo& info, SearchMode mode, const Sizes& requested) {
  const Sizes& defaults =
      mode == SearchMode::Exhaustive ? info.default_exhaustive : info.default_seeded;
  if (requested.empty()) return defaults;
  if (requested.size() == 1) return Sizes(info.dims.size(), requested.front());
  if (requested.size() != info.dims.size()) {
    throw Error(ErrorCode::InvalidArgument,
                info.name + " takes " + std::to_string(info.dims.size()) +
                    " size bounds, got " + std::to_string(requested.size()));
  }
  return requested;
}

}  // namespace

std::uint64_t exhaustive_estimate(LawId law, const Sizes& sizes) {
  return law_runner(law).estimate(resolve_sizes(law_info(law), SearchMode::Exhaustive, sizes));
}

SearchSummary search(const SearchConfig& config) {
  const LawRunner& runner = law_runner(config.law);
  const Sizes sizes = resolve_sizes(runner.info(), config.mode, config.max_size);
  if (config.parallelism == 0) {
    throw Error(ErrorCode::InvalidArgument, "parallelism must be at least 1");
  }
  if (config.mode == SearchMode::Exhaustive) {
    const std::uint64_t estimate = runner.estimate(sizes);
    if (estimate > kMaxExhaustiveInstances) {
      throw Error(ErrorCode::BoundsExceeded,
                  "exhaustive bound " + join_sizes(sizes) + " for " + runner.info().name +
                      " needs about " + std::to_string(estimate) +
                      " candidates, limit is " + std::to_string(kMaxExhaustiveInstances));
    }
  }
  const auto start = std::chrono::steady_clock::now();
  SearchSummary summary = runner.run(config, sizes);
  summary.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return summary;
}

std::optional<Witness> check_law(LawId law, const Workspace& instance, std::size_t cap) {
  return law_runner(law).check_workspace(instance, cap);
}

bool replay(const Witness& w, std::size_t cap) {
  auto again = check_law(w.law, w.structures, cap);
  return again && again->violation.axiom == w.violation.axiom &&
         again->violation.pairs == w.violation.pairs;
}

}  // namespace promrep
