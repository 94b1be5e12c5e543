#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsd/disambig.hpp"
#include "wsd/model.hpp"

namespace wsd {

struct SenseKey {
  std::string word;
  SenseId sense;

  auto operator<=>(const SenseKey&) const = default;
};

struct SenseCountEntry {
  std::uint64_t gold_total = 0;  // test items whose gold tag is this sense
  std::uint64_t estimated = 0;   // system outputs of this sense
  std::uint64_t correct = 0;
};

using SenseCounts = std::map<SenseKey, SenseCountEntry>;

// Percentages in [0, 100].
double recall_pct(const SenseCountEntry& c);     // throws when gold_total = 0
double precision_pct(const SenseCountEntry& c);  // throws when estimated = 0
double f_score(double recall, double precision); // 0 when both are 0

struct EvalReport {
  struct Row {
    SenseKey key;
    SenseCountEntry counts;
    std::optional<double> recall;     // absent when gold_total = 0
    std::optional<double> precision;  // absent when estimated = 0
    std::optional<double> f;          // needs both
  };

  std::vector<Row> rows;
  std::uint64_t total_gold = 0;
  std::uint64_t total_estimated = 0;
  std::uint64_t total_correct = 0;
  double micro_recall = 0.0;     // ratio of summed counts
  double micro_precision = 0.0;
  double micro_f = 0.0;
  double macro_recall = 0.0;     // unweighted mean of defined per-sense values
  double macro_precision = 0.0;
  double macro_f = 0.0;
  std::uint64_t abstained = 0;
};

EvalReport aggregate(const SenseCounts& counts, std::uint64_t abstained = 0);

struct EvalOutcome {
  SenseCounts counts;
  std::uint64_t abstained = 0;
  std::vector<std::size_t> decided;  // indices of non-abstained instances
};

EvalOutcome evaluate_instances(const SenseModel& model,
                               const std::vector<TaggedInstance>& instances,
                               const DecisionPolicy& policy);

// Aligned text table plus a machine-readable summary line.
std::string format_report(const EvalReport& report);
std::string summary_line(const EvalReport& report);

// Counts fixture: `word<TAB>sense<TAB>gold<TAB>estimated<TAB>correct` per line.
SenseCounts load_sense_counts(const std::string& path);

struct ExperimentConfig {
  ModelConfig base_config;        // shared alpha / n1 / n2 / cws_restrict
  bool baseline_abstain = true;   // base-sense-only runs abstain by default
  bool ess_abstain = false;       // extended runs answer everything
};

struct ExperimentResult {
  EvalReport baseline_report;
  EvalReport ess_report;
  std::vector<std::size_t> baseline_decided;  // test-set indices
  std::vector<std::size_t> ess_decided;
  std::size_t test_size = 0;
  double recall_delta = 0.0;  // ess micro recall - baseline micro recall
};

// Splits, trains the base-sense-only and extended configurations on the same
// train split, and evaluates both on the same test split.
ExperimentResult run_experiment(const std::vector<TaggedInstance>& instances,
                                const SenseInventory& inv, const Taxonomy& t,
                                const CwsTable& cws, const ExperimentConfig& cfg,
                                const SplitSpec& split);

}  // namespace wsd
