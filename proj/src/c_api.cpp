#include "promrep/promrep.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "promrep/commands.hpp"

struct promrep_workspace {
  promrep::Workspace ws;
};

namespace {

thread_local std::string last_error;

promrep_status status_of(promrep::ErrorCode code) {
  using promrep::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return PROMREP_E_PARSE;
    case ErrorCode::Reference: return PROMREP_E_REFERENCE;
    case ErrorCode::Kind: return PROMREP_E_KIND;
    case ErrorCode::CapExceeded: return PROMREP_E_CAP;
    case ErrorCode::BoundsExceeded: return PROMREP_E_BOUNDS;
    case ErrorCode::InvalidArgument: return PROMREP_E_ARGUMENT;
    case ErrorCode::InvalidStructure: return PROMREP_E_INVALID_INPUT;
    case ErrorCode::CarrierMismatch: return PROMREP_E_CARRIER;
  }
  return PROMREP_E_INTERNAL;
}

template <class F>
promrep_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return PROMREP_OK;
  } catch (const promrep::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return PROMREP_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PROMREP_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw promrep::Error(promrep::ErrorCode::InvalidArgument, what);
}

std::size_t cap_or_default(std::size_t cap) {
  return cap == 0 ? promrep::kDefaultPowersetCap : cap;
}

}  // namespace

extern "C" {

const char* promrep_version(void) { return "0.1.0"; }

const char* promrep_last_error(void) { return last_error.c_str(); }

const char* promrep_status_name(promrep_status status) {
  switch (status) {
    case PROMREP_OK: return "ok";
    case PROMREP_E_PARSE: return "parse error";
    case PROMREP_E_REFERENCE: return "unresolved reference";
    case PROMREP_E_KIND: return "wrong structure kind";
    case PROMREP_E_CAP: return "powerset cap exceeded";
    case PROMREP_E_BOUNDS: return "bounds exceeded";
    case PROMREP_E_ARGUMENT: return "invalid argument";
    case PROMREP_E_INVALID_INPUT: return "invalid structure";
    case PROMREP_E_CARRIER: return "carrier mismatch";
    case PROMREP_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void promrep_string_free(char* s) { std::free(s); }

promrep_status promrep_workspace_from_string(const char* text, promrep_workspace** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new promrep_workspace{promrep::Workspace::parse(text)};
  });
}

promrep_status promrep_workspace_from_file(const char* path, promrep_workspace** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw promrep::Error(promrep::ErrorCode::Parse, std::string("cannot read ") + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new promrep_workspace{promrep::Workspace::parse(buf.str())};
  });
}

void promrep_workspace_free(promrep_workspace* ws) { delete ws; }

promrep_status promrep_workspace_to_string(const promrep_workspace* ws, char** out) {
  return guarded([&] {
    require(ws && out, "null argument");
    *out = dup(ws->ws.serialize());
  });
}

promrep_status promrep_check(const promrep_workspace* ws, const char* name, int* holds,
                             char** report) {
  return guarded([&] {
    require(ws && name && holds, "null argument");
    promrep::CheckOutcome c = promrep::check_named(ws->ws, name);
    *holds = c.holds ? 1 : 0;
    if (report) *report = dup(c.report);
  });
}

promrep_status promrep_apply(const promrep_workspace* ws, const char* functor, const char* name,
                             const char* aux, size_t cap, promrep_workspace** out) {
  return guarded([&] {
    require(ws && functor && name && out, "null argument");
    *out = new promrep_workspace{
        promrep::apply_functor(ws->ws, functor, name, aux ? aux : "", cap_or_default(cap))};
  });
}

void promrep_verify_options_init(promrep_verify_options* opts) {
  if (!opts) return;
  *opts = promrep_verify_options{};
  opts->trials = 500;
  opts->jobs = 1;
  opts->powerset_cap = promrep::kDefaultPowersetCap;
}

promrep_status promrep_verify(const promrep_verify_options* opts, int* holds, char** summary,
                              char** witness, uint64_t* elapsed_ms) {
  return guarded([&] {
    require(opts && opts->law && holds, "null argument");
    auto law = promrep::parse_law(opts->law);
    if (!law) {
      throw promrep::Error(promrep::ErrorCode::InvalidArgument,
                           std::string("unknown law '") + opts->law + "'");
    }
    promrep::SearchConfig config;
    config.law = *law;
    config.mode = opts->exhaustive ? promrep::SearchMode::Exhaustive : promrep::SearchMode::Seeded;
    if (opts->max_size) config.max_size.assign(opts->max_size, opts->max_size + opts->max_size_count);
    config.trials = opts->trials;
    config.seed = opts->seed;
    config.parallelism = opts->jobs;
    config.powerset_cap = cap_or_default(opts->powerset_cap);
    promrep::SearchSummary s = promrep::search(config);
    *holds = s.holds() ? 1 : 0;
    if (summary) *summary = dup(s.to_text(opts->pretty != 0));
    if (witness) *witness = s.witness ? dup(s.witness->to_json()) : nullptr;
    if (elapsed_ms) *elapsed_ms = static_cast<uint64_t>(s.elapsed.count());
  });
}

promrep_status promrep_laws(char** listing) {
  return guarded([&] {
    require(listing, "null argument");
    *listing = dup(promrep::laws_listing());
  });
}

size_t promrep_law_count(void) { return promrep::law_catalog().size(); }

promrep_status promrep_replay_witness(const char* witness_json, size_t cap, int* reproduced) {
  return guarded([&] {
    require(witness_json && reproduced, "null argument");
    *reproduced =
        promrep::replay(promrep::Witness::from_json(witness_json), cap_or_default(cap)) ? 1 : 0;
  });
}

}  // extern "C"
