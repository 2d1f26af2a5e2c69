#pragma once

// Generators, exhaustive enumerators, the law catalog and the search engine
// that runs a law over every small instance or over seeded random instances.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "promrep/adjunction.hpp"
#include "promrep/exactness.hpp"
#include "promrep/workspace.hpp"

namespace promrep {

// --- randomness ---------------------------------------------------------------

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;
/// Seed of trial `index` under a run seed; independent of scheduling.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr double kEdgeProbability = 0.3;

// --- generators -----------------------------------------------------------------

Rel random_relation(Rng& rng, const FinSet& src, const FinSet& dst,
                    double p = kEdgeProbability);
FnMap random_map(Rng& rng, const FinSet& src, const FinSet& dst);

Preorder gen_preorder(Rng& rng, const FinSet& carrier);
Preorder gen_preorder(std::uint64_t seed, std::size_t size);

Prom gen_prom(Rng& rng, const FinSet& A, const FinSet& B);
Prom gen_prom(std::uint64_t seed, std::size_t size_a, std::size_t size_b);

Representation gen_representation(Rng& rng, const FinSet& M, const FinSet& S);
Representation gen_representation(std::uint64_t seed, std::size_t size_m,
                                  std::size_t size_s);

/// Carrier bounds for morphism generation: both endpoints draw their sizes
/// uniformly from [0, max_a] and [0, max_b].
struct MorphismBounds {
  std::size_t max_a = 3;
  std::size_t max_b = 3;
};

/// A prom morphism into `target` whose source is freshly generated. Falls
/// back to the identity on `target` when filtering keeps failing.
PromMorphism gen_prom_morphism_into(Rng& rng, const Prom& target,
                                    const MorphismBounds& bounds);
PromMorphism gen_prom_morphism(Rng& rng, const MorphismBounds& bounds);
PromMorphism gen_prom_morphism(std::uint64_t seed, const MorphismBounds& bounds);

/// A representation morphism src → dst drawn uniformly from the enumeration,
/// or nullopt when the hom-set is empty.
std::optional<RepMorphism> pick_rep_morphism(Rng& rng, const Representation& src,
                                             const Representation& dst);

// --- enumeration ----------------------------------------------------------------

inline constexpr std::size_t kMaxRelationCells = 16;
inline constexpr std::size_t kMaxMorphismTauCells = 9;
inline constexpr std::uint64_t kMaxExhaustiveInstances = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxMorphismCandidates = std::uint64_t{1} << 16;

/// Number of preorders on an n-element set, for n ≤ 4.
std::uint64_t preorder_count(std::size_t n);

std::vector<Rel> all_relations(const FinSet& src, const FinSet& dst);
std::vector<Rel> all_preorders(const FinSet& carrier);
std::vector<FnMap> all_maps(const FinSet& src, const FinSet& dst);
std::vector<Prom> all_proms(const FinSet& A, const FinSet& B);
std::vector<Representation> all_representations(const FinSet& M, const FinSet& S);

std::vector<PromMorphism> enumerate_prom_morphisms(const Prom& src, const Prom& dst);
/// Every φ: S → S' and τ ⊆ M' × M satisfying the morphism equation. Requires
/// |M'|·|M| ≤ 9.
std::vector<RepMorphism> enumerate_rep_morphisms(const Representation& src,
                                                 const Representation& dst);

// --- laws -----------------------------------------------------------------------

enum class LawId {
  Eq1Galois,
  DualGalois,
  ModularTautology,
  PreorderSingleAxiom,
  MemResidualSubset,
  Lemma1,
  Lemma2,
  Lemma3,
  Lemma4,
  Lemma5,
  Lemma6,
  Lemma7,
  Lemma8,
  Lemma9,
  Lemma10,
  Lemma11,
  TriangleRepr,
  TrianglePom,
  UnitNatural,
  CounitNatural,
  PsiCharacterization,
  SoundnessResidualEquiv,
};

using Sizes = std::vector<std::size_t>;

struct LawInfo {
  LawId id;
  std::string name;      // catalog identifier, e.g. "lemma9"
  std::string citation;  // one-line statement
  std::vector<std::string> dims;  // carriers bounded by --max-size
  Sizes default_exhaustive;
  Sizes default_seeded;
  std::string noun = "instances";  // what one checked instance is
};

const std::vector<LawInfo>& law_catalog();
const LawInfo& law_info(LawId id);
std::optional<LawId> parse_law(std::string_view name);

/// Result of checking one instance: a violation, plus tags that the search
/// tallies (e.g. "strict", "exact").
struct LawOutcome {
  std::optional<Violation> violation;
  std::vector<std::string> tags;
};

struct Witness {
  LawId law;
  std::optional<std::uint64_t> seed;  // nullopt: exhaustive
  std::uint64_t index = 0;            // trial or enumeration index
  Workspace structures;
  Violation violation;

  std::string to_json() const;
  static Witness from_json(std::string_view text);
};

enum class SearchMode { Exhaustive, Seeded };

struct SearchConfig {
  LawId law = LawId::Eq1Galois;
  SearchMode mode = SearchMode::Seeded;
  Sizes max_size;  // empty: the law's default for the mode
  std::uint64_t trials = 500;
  std::uint64_t seed = 0;
  unsigned parallelism = 1;
  std::size_t powerset_cap = kDefaultPowersetCap;
};

struct ShapeTally {
  std::uint64_t count = 0;
  std::map<std::string, std::uint64_t> tags;
};

struct SearchSummary {
  LawId law;
  SearchMode mode;
  Sizes max_size;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t checked = 0;
  std::map<std::string, ShapeTally> shapes;
  std::map<std::string, std::uint64_t> tags;
  std::optional<Witness> witness;
  std::chrono::milliseconds elapsed{0};

  bool holds() const noexcept { return !witness.has_value(); }
  std::uint64_t tag(const std::string& name) const;
  /// Line-oriented `key: value` report; identical for identical configs
  /// regardless of parallelism (elapsed time is not part of it).
  std::string to_text(bool pretty = false) const;
};

/// Throws BoundsExceeded for infeasible exhaustive bounds and
/// InvalidArgument for malformed configs.
SearchSummary search(const SearchConfig& config);

/// Upper bound on exhaustive candidates for the given bounds.
std::uint64_t exhaustive_estimate(LawId law, const Sizes& sizes);

/// Checks one instance given as a workspace using the law's conventional
/// structure names. Invalid instances raise InvalidArgument.
std::optional<Witness> check_law(LawId law, const Workspace& instance,
                                 std::size_t cap = kDefaultPowersetCap);

/// Re-runs a witness; true when the same violation is reproduced.
bool replay(const Witness& w, std::size_t cap = kDefaultPowersetCap);

// --- engine internals exposed for testing -----------------------------------

/// Type-erased law: enumeration, generation, checking and serialization of
/// one instance type.
class LawRunner {
 public:
  virtual ~LawRunner() = default;
  virtual const LawInfo& info() const = 0;
  virtual std::uint64_t estimate(const Sizes& sizes) const = 0;
  virtual SearchSummary run(const SearchConfig& config, const Sizes& sizes) const = 0;
  virtual std::optional<Witness> check_workspace(const Workspace& ws,
                                                 std::size_t cap) const = 0;
};

template <class Inst>
struct LawDefinition {
  LawInfo info;
  std::function<std::uint64_t(const Sizes&)> estimate;
  /// Calls visit(instance, shape) for every instance; stops when visit
  /// returns false.
  std::function<void(const Sizes&, std::size_t cap,
                     const std::function<bool(const Inst&, const std::string&)>&)>
      enumerate;
  std::function<Inst(Rng&, const Sizes&)> generate;
  std::function<std::string(const Inst&)> shape;
  std::function<LawOutcome(const Inst&, std::size_t cap)> check;
  std::function<Workspace(const Inst&)> to_workspace;
  std::function<Inst(const Workspace&)> from_workspace;
};

template <class Inst>
std::unique_ptr<LawRunner> make_runner(LawDefinition<Inst> def);

const LawRunner& law_runner(LawId id);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace promrep

#include "promrep/harness_engine.hpp"
