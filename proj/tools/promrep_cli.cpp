// promrep command-line front end. Links only the C interface.
//
// Exit codes: 0 holds, 1 refuted or violated, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "promrep/promrep.h"

namespace {

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { promrep_string_free(p); }
};

struct WsDeleter {
  void operator()(promrep_workspace* ws) const { promrep_workspace_free(ws); }
};
using WsPtr = std::unique_ptr<promrep_workspace, WsDeleter>;

int fail(promrep_status st) {
  std::cerr << "error: " << promrep_status_name(st) << ": " << promrep_last_error() << "\n";
  return kUsage;
}

bool parse_sizes(const std::string& text, std::vector<size_t>& out) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) return false;
    out.push_back(std::stoul(item));
  }
  return !out.empty();
}

WsPtr load(const std::string& file, promrep_status& st) {
  promrep_workspace* ws = nullptr;
  st = promrep_workspace_from_file(file.c_str(), &ws);
  return WsPtr(ws);
}

int run_check(const std::string& file, const std::string& name) {
  promrep_status st;
  WsPtr ws = load(file, st);
  if (st != PROMREP_OK) return fail(st);
  int holds = 0;
  Owned report;
  st = promrep_check(ws.get(), name.c_str(), &holds, &report.p);
  if (st != PROMREP_OK) return fail(st);
  std::cout << report.p;
  return holds ? kHolds : kRefuted;
}

int run_apply(const std::string& functor, const std::string& file, const std::string& name,
              const std::string& aux, size_t cap) {
  promrep_status st;
  WsPtr ws = load(file, st);
  if (st != PROMREP_OK) return fail(st);
  promrep_workspace* raw = nullptr;
  st = promrep_apply(ws.get(), functor.c_str(), name.c_str(), aux.empty() ? nullptr : aux.c_str(),
                     cap, &raw);
  if (st != PROMREP_OK) return fail(st);
  WsPtr out(raw);
  Owned text;
  st = promrep_workspace_to_string(out.get(), &text.p);
  if (st != PROMREP_OK) return fail(st);
  std::cout << text.p;
  return kHolds;
}

int run_verify(const std::string& law, const std::string& mode, const std::string& max_size,
               uint64_t trials, uint64_t seed, unsigned jobs, bool pretty, size_t cap) {
  promrep_verify_options opts;
  promrep_verify_options_init(&opts);
  opts.law = law.c_str();
  opts.exhaustive = mode == "exhaustive";
  std::vector<size_t> sizes;
  if (!max_size.empty()) {
    if (!parse_sizes(max_size, sizes)) {
      std::cerr << "error: --max-size expects N or N,N,...\n";
      return kUsage;
    }
    opts.max_size = sizes.data();
    opts.max_size_count = sizes.size();
  }
  opts.trials = trials;
  opts.seed = seed;
  opts.jobs = jobs;
  opts.pretty = pretty ? 1 : 0;
  opts.powerset_cap = cap;
  int holds = 0;
  Owned summary, witness;
  uint64_t elapsed = 0;
  promrep_status st = promrep_verify(&opts, &holds, &summary.p, &witness.p, &elapsed);
  if (st != PROMREP_OK) return fail(st);
  std::cout << summary.p;
  if (witness.p) std::cout << "witness:\n" << witness.p;
  std::cerr << "elapsed_ms: " << elapsed << "\n";
  return holds ? kHolds : kRefuted;
}

int run_laws() {
  Owned listing;
  promrep_status st = promrep_laws(&listing.p);
  if (st != PROMREP_OK) return fail(st);
  std::cout << listing.p;
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model checker for proms, representations and their adjunction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(promrep_version()));

  size_t cap = 12;
  app.add_option("--powerset-cap", cap, "Largest base set for powerset carriers")
      ->check(CLI::Range(size_t{0}, size_t{20}));

  std::string file, name, functor, aux_prom, aux_rep;
  auto* check = app.add_subcommand("check", "Check the axioms of a named structure");
  check->add_option("file", file, "Workspace file")->required();
  check->add_option("name", name, "Structure name")->required();

  auto* apply = app.add_subcommand("apply", "Apply R, M, MR, RM, unit, counit, psi or tee");
  apply->add_option("functor", functor, "Functor")
      ->required()
      ->check(CLI::IsMember({"R", "M", "MR", "RM", "unit", "counit", "psi", "tee"}));
  apply->add_option("file", file, "Workspace file")->required();
  apply->add_option("name", name, "Structure name")->required();
  auto* prom_opt = apply->add_option("--prom", aux_prom, "Prom p for psi on a morphism R(p) -> R");
  apply->add_option("--rep", aux_rep, "Representation R for tee on a morphism p -> M(R)")
      ->excludes(prom_opt);

  std::string law, mode = "seeded", max_size;
  uint64_t trials = 500, seed = 0;
  unsigned jobs = 1;
  bool pretty = false;
  auto* verify = app.add_subcommand("verify", "Search a law for counterexamples");
  verify->add_option("law", law, "Law identifier (see `laws`)")->required();
  verify->add_option("--mode", mode, "exhaustive or seeded")
      ->check(CLI::IsMember({"exhaustive", "seeded"}));
  verify->add_option("--max-size", max_size, "Carrier bound N, or one bound per dimension");
  verify->add_option("--trials", trials, "Seeded trials");
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--pretty", pretty, "Table output");

  auto* laws = app.add_subcommand("laws", "List the law catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*check) return run_check(file, name);
  if (*apply) return run_apply(functor, file, name, aux_prom.empty() ? aux_rep : aux_prom, cap);
  if (*verify) return run_verify(law, mode, max_size, trials, seed, jobs, pretty, cap);
  if (*laws) return run_laws();
  return kUsage;
}
