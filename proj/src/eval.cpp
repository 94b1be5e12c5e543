#include "wsd/eval.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

namespace {

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string pct_or_dash(const std::optional<double>& v) {
  return v ? pct(*v) : std::string("-");
}

}  // namespace

double recall_pct(const SenseCountEntry& c) {
  if (c.gold_total == 0) throw std::invalid_argument("recall undefined: no gold instances");
  return 100.0 * static_cast<double>(c.correct) / static_cast<double>(c.gold_total);
}

double precision_pct(const SenseCountEntry& c) {
  if (c.estimated == 0) throw std::invalid_argument("precision undefined: no estimations");
  return 100.0 * static_cast<double>(c.correct) / static_cast<double>(c.estimated);
}

double f_score(double recall, double precision) {
  if (recall < 0.0 || precision < 0.0)
    throw std::invalid_argument("f_score: negative input");
  const double sum = recall + precision;
  if (sum == 0.0) return 0.0;
  return 2.0 * recall * precision / sum;
}

EvalReport aggregate(const SenseCounts& counts, std::uint64_t abstained) {
  if (counts.empty()) throw std::invalid_argument("aggregate: no sense entries");

  EvalReport report;
  report.abstained = abstained;

  double macro_r_sum = 0.0;
  std::size_t macro_r_n = 0;
  double macro_p_sum = 0.0;
  std::size_t macro_p_n = 0;
  double macro_f_sum = 0.0;
  std::size_t macro_f_n = 0;

  for (const auto& [key, entry] : counts) {
    EvalReport::Row row;
    row.key = key;
    row.counts = entry;
    if (entry.gold_total > 0) {
      row.recall = recall_pct(entry);
      macro_r_sum += *row.recall;
      ++macro_r_n;
    }
    if (entry.estimated > 0) {
      row.precision = precision_pct(entry);
      macro_p_sum += *row.precision;
      ++macro_p_n;
    }
    if (row.recall && row.precision) {
      row.f = f_score(*row.recall, *row.precision);
      macro_f_sum += *row.f;
      ++macro_f_n;
    }
    report.total_gold += entry.gold_total;
    report.total_estimated += entry.estimated;
    report.total_correct += entry.correct;
    report.rows.push_back(std::move(row));
  }

  report.micro_recall = report.total_gold
                            ? 100.0 * static_cast<double>(report.total_correct) /
                                  static_cast<double>(report.total_gold)
                            : 0.0;
  report.micro_precision = report.total_estimated
                               ? 100.0 * static_cast<double>(report.total_correct) /
                                     static_cast<double>(report.total_estimated)
                               : 0.0;
  report.micro_f = f_score(report.micro_recall, report.micro_precision);
  report.macro_recall = macro_r_n ? macro_r_sum / static_cast<double>(macro_r_n) : 0.0;
  report.macro_precision = macro_p_n ? macro_p_sum / static_cast<double>(macro_p_n) : 0.0;
  report.macro_f = macro_f_n ? macro_f_sum / static_cast<double>(macro_f_n) : 0.0;
  return report;
}

EvalOutcome evaluate_instances(const SenseModel& model,
                               const std::vector<TaggedInstance>& instances,
                               const DecisionPolicy& policy) {
  EvalOutcome outcome;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const TaggedInstance& inst = instances[i];
    outcome.counts[{inst.word, inst.tag}].gold_total += 1;

    const Decision d = disambiguate(model, inst.word, inst.context, policy);
    if (d.abstained) {
      ++outcome.abstained;
      continue;
    }
    SenseCountEntry& chosen = outcome.counts[{inst.word, d.chosen}];
    chosen.estimated += 1;
    if (d.chosen == inst.tag) chosen.correct += 1;
    outcome.decided.push_back(i);
  }
  return outcome;
}

std::string summary_line(const EvalReport& r) {
  std::ostringstream out;
  out << "micro_recall=" << pct(r.micro_recall) << ";micro_precision=" << pct(r.micro_precision)
      << ";micro_f=" << pct(r.micro_f) << ";macro_recall=" << pct(r.macro_recall)
      << ";macro_precision=" << pct(r.macro_precision) << ";macro_f=" << pct(r.macro_f)
      << ";abstained=" << r.abstained;
  return out.str();
}

std::string format_report(const EvalReport& report) {
  std::size_t word_w = 4;
  std::size_t sense_w = 5;
  for (const EvalReport::Row& row : report.rows) {
    word_w = std::max(word_w, row.key.word.size());
    sense_w = std::max(sense_w, row.key.sense.size());
  }

  std::ostringstream out;
  auto cell = [&out](const std::string& s, std::size_t width) {
    out << s;
    for (std::size_t i = s.size(); i < width + 2; ++i) out << ' ';
  };

  cell("word", word_w);
  cell("sense", sense_w);
  cell("gold", 6);
  cell("correct/estimated", 17);
  cell("recall", 6);
  cell("precision", 9);
  out << "f-score\n";

  for (const EvalReport::Row& row : report.rows) {
    cell(row.key.word, word_w);
    cell(row.key.sense, sense_w);
    cell(std::to_string(row.counts.gold_total), 6);
    cell(std::to_string(row.counts.correct) + "/" + std::to_string(row.counts.estimated), 17);
    cell(pct_or_dash(row.recall), 6);
    cell(pct_or_dash(row.precision), 9);
    out << pct_or_dash(row.f) << '\n';
  }

  out << "micro: recall " << pct(report.micro_recall) << "  precision "
      << pct(report.micro_precision) << "  f-score " << pct(report.micro_f) << '\n';
  out << "macro: recall " << pct(report.macro_recall) << "  precision "
      << pct(report.macro_precision) << "  f-score " << pct(report.macro_f) << '\n';
  out << "abstained: " << report.abstained << '\n';
  out << summary_line(report) << '\n';
  return out.str();
}

SenseCounts load_sense_counts(const std::string& path) {
  SenseCounts counts;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::vector<std::string> fields = split_fields(line, '\t');
    if (fields.size() != 5)
      throw std::runtime_error(where +
                               ": expected `word<TAB>sense<TAB>gold<TAB>estimated<TAB>correct`");
    SenseKey key{std::string(trim(fields[0])), std::string(trim(fields[1]))};
    if (key.word.empty() || key.sense.empty())
      throw std::runtime_error(where + ": empty word or sense");
    SenseCountEntry entry;
    entry.gold_total = parse_count(fields[2], where);
    entry.estimated = parse_count(fields[3], where);
    entry.correct = parse_count(fields[4], where);
    if (entry.correct > entry.estimated || entry.correct > entry.gold_total)
      throw std::runtime_error(where + ": correct exceeds estimated or gold counts");
    if (!counts.emplace(key, entry).second)
      throw std::runtime_error(where + ": duplicate (word, sense) entry");
  }
  return counts;
}

ExperimentResult run_experiment(const std::vector<TaggedInstance>& instances,
                                const SenseInventory& inv, const Taxonomy& t,
                                const CwsTable& cws, const ExperimentConfig& cfg,
                                const SplitSpec& split) {
  auto [train, test] = split_instances(instances, split);
  if (test.empty()) throw std::runtime_error("run_experiment: empty test split");

  ModelConfig baseline_cfg = cfg.base_config;
  baseline_cfg.use_ess = false;
  ModelConfig ess_cfg = cfg.base_config;
  ess_cfg.use_ess = true;

  const SenseModel baseline = train_model(train, inv, t, cws, baseline_cfg);
  const SenseModel extended = train_model(train, inv, t, cws, ess_cfg);

  EvalOutcome baseline_out =
      evaluate_instances(baseline, test, DecisionPolicy{cfg.baseline_abstain});
  EvalOutcome ess_out = evaluate_instances(extended, test, DecisionPolicy{cfg.ess_abstain});

  ExperimentResult result;
  result.baseline_report = aggregate(baseline_out.counts, baseline_out.abstained);
  result.ess_report = aggregate(ess_out.counts, ess_out.abstained);
  result.baseline_decided = std::move(baseline_out.decided);
  result.ess_decided = std::move(ess_out.decided);
  result.test_size = test.size();
  result.recall_delta = result.ess_report.micro_recall - result.baseline_report.micro_recall;
  return result;
}

}  // namespace wsd
