#pragma once

// Search engine behind LawRunner. Instances are checked in fixed-size
// batches; outcomes are merged in index order so that the summary and the
// reported witness do not depend on the number of worker threads.

#include <algorithm>
#include <exception>
#include <utility>

namespace promrep {

namespace detail {

inline constexpr std::size_t kBatchSize = 1024;

void tally(SearchSummary& summary, const std::string& shape, const LawOutcome& outcome);

template <class Inst>
class TypedRunner final : public LawRunner {
 public:
  explicit TypedRunner(LawDefinition<Inst> def) : def_(std::move(def)) {}

  const LawInfo& info() const override { return def_.info; }

  std::uint64_t estimate(const Sizes& sizes) const override { return def_.estimate(sizes); }

  SearchSummary run(const SearchConfig& config, const Sizes& sizes) const override {
    SearchSummary summary;
    summary.law = config.law;
    summary.mode = config.mode;
    summary.max_size = sizes;
    summary.seed = config.seed;
    summary.trials = config.mode == SearchMode::Seeded ? config.trials : 0;
    if (config.mode == SearchMode::Exhaustive) {
      run_exhaustive(config, sizes, summary);
    } else {
      run_seeded(config, sizes, summary);
    }
    return summary;
  }

  std::optional<Witness> check_workspace(const Workspace& ws,
                                         std::size_t cap) const override {
    Inst inst = def_.from_workspace(ws);
    LawOutcome out = def_.check(inst, cap);
    if (!out.violation) return std::nullopt;
    return Witness{def_.info.id, std::nullopt, 0, ws, std::move(*out.violation)};
  }

 private:
  void run_exhaustive(const SearchConfig& config, const Sizes& sizes,
                      SearchSummary& summary) const {
    std::vector<std::pair<Inst, std::string>> batch;
    batch.reserve(kBatchSize);
    std::uint64_t next_index = 0;
    bool stop = false;
    auto flush = [&] {
      std::vector<LawOutcome> outs(batch.size());
      std::vector<std::exception_ptr> errors(batch.size());
      parallel_for(batch.size(), config.parallelism, [&](std::size_t i) {
        try {
          outs[i] = def_.check(batch[i].first, config.powerset_cap);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        tally(summary, batch[i].second, outs[i]);
        if (outs[i].violation) {
          summary.witness = Witness{def_.info.id, std::nullopt, next_index + i,
                                    def_.to_workspace(batch[i].first),
                                    std::move(*outs[i].violation)};
          stop = true;
          break;
        }
      }
      next_index += batch.size();
      batch.clear();
    };
    def_.enumerate(sizes, config.powerset_cap,
                   [&](const Inst& inst, const std::string& shape) {
                     batch.emplace_back(inst, shape);
                     if (batch.size() >= kBatchSize) flush();
                     return !stop;
                   });
    if (!stop && !batch.empty()) flush();
  }

  void run_seeded(const SearchConfig& config, const Sizes& sizes,
                  SearchSummary& summary) const {
    for (std::uint64_t start = 0; start < config.trials; start += kBatchSize) {
      const std::size_t n =
          static_cast<std::size_t>(std::min<std::uint64_t>(kBatchSize, config.trials - start));
      std::vector<LawOutcome> outs(n);
      std::vector<std::string> shapes(n);
      std::vector<std::exception_ptr> errors(n);
      parallel_for(n, config.parallelism, [&](std::size_t i) {
        try {
          Rng rng(child_seed(config.seed, start + i));
          Inst inst = def_.generate(rng, sizes);
          shapes[i] = def_.shape(inst);
          outs[i] = def_.check(inst, config.powerset_cap);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
      for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        tally(summary, shapes[i], outs[i]);
        if (outs[i].violation) {
          Rng rng(child_seed(config.seed, start + i));
          summary.witness = Witness{def_.info.id, config.seed, start + i,
                                    def_.to_workspace(def_.generate(rng, sizes)),
                                    std::move(*outs[i].violation)};
          return;
        }
      }
    }
  }

  LawDefinition<Inst> def_;
};

}  // namespace detail

template <class Inst>
std::unique_ptr<LawRunner> make_runner(LawDefinition<Inst> def) {
  return std::make_unique<detail::TypedRunner<Inst>>(std::move(def));
}

}  // namespace promrep
