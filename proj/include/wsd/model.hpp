#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsd/bitext.hpp"
#include "wsd/corpus.hpp"
#include "wsd/taxonomy.hpp"

namespace wsd {

struct ModelConfig {
  double alpha = 0.5;            // hypernym count-transfer factor in [0,1]
  std::optional<double> n1;      // prior smoothing constant; default |S(w)|
  std::optional<double> n2;      // likelihood smoothing constant; default |C(w)|+1
  bool use_ess = true;           // score over E(w) instead of M(w)
  bool cws_restrict = true;      // ignore context words outside C(w)
};

// Training counts, kept as exact integers:
//   CT(w)      occurrences of w that received a sense tag
//   CT(w,m)    ... that received tag m
//   CT(w,m,c)  sentences where tagged w and context word c co-occur
class CountTables {
 public:
  void add(const TaggedInstance& inst, const CooccurrenceSet* cws, bool cws_restrict);
  void merge(const CountTables& other);

  std::uint64_t word_total(const std::string& w) const;
  std::uint64_t sense_count(const std::string& w, const SenseId& m) const;
  std::uint64_t sense_context_count(const std::string& w, const SenseId& m,
                                    const std::string& c) const;

  // Observed tags of w with their counts (empty map for unseen words).
  const std::map<SenseId, std::uint64_t>& senses_of(const std::string& w) const;
  const std::map<std::string, std::uint64_t>& contexts_of(const std::string& w,
                                                          const SenseId& m) const;

  std::vector<std::string> words() const;
  bool empty() const { return words_.empty(); }

  // Used by deserialization; keeps word_total consistent with sense sums.
  void set_sense_count(const std::string& w, const SenseId& m, std::uint64_t n);
  void set_sense_context_count(const std::string& w, const SenseId& m, const std::string& c,
                               std::uint64_t n);

 private:
  struct WordCounts {
    std::uint64_t total = 0;
    std::map<SenseId, std::uint64_t> by_sense;
    std::map<SenseId, std::map<std::string, std::uint64_t>> by_sense_context;
  };
  std::map<std::string, WordCounts> words_;
};

// Counts one increment per instance for CT(w) and CT(w,m), and one per
// distinct context word for CT(w,m,c). Tags must belong to M(word).
CountTables accumulate_counts(const std::vector<TaggedInstance>& instances,
                              const SenseInventory& inv, const CwsTable& cws,
                              const ModelConfig& cfg);

// P(m|w) = (sum_m' CT(w,m')*WG(m,m') + 1) / (CT(w) + N1)
double estimate_prior(const CountTables& ct, const Taxonomy& t, const std::string& w,
                      const SenseId& m, std::size_t space_size, const ModelConfig& cfg);

// P(c|w,m) = (sum_m' CT(w,m',c)*WG(m,m') + 1) / (sum_m' CT(w,m')*WG(m,m') + N2)
double estimate_likelihood(const CountTables& ct, const Taxonomy& t, const std::string& w,
                           const SenseId& m, const std::string& c, std::size_t cws_size,
                           const ModelConfig& cfg);

// Trained sense-selection model: per word, the sense space S(w) (base or
// extended), priors, and per-context-word likelihoods. Probabilities are
// recomputed from the integer counts, never stored.
class SenseModel {
 public:
  struct WordEntry {
    ExtendedSenseSet ess;
    std::vector<SenseId> space;  // S(w)
    std::map<SenseId, double> prior;
    std::map<SenseId, std::map<std::string, double>> likelihood;  // per c in C(w)
  };

  bool has_word(const std::string& w) const;
  const WordEntry& entry(const std::string& w) const;
  std::vector<std::string> words() const;

  double prior(const std::string& w, const SenseId& m) const;
  double likelihood(const std::string& w, const SenseId& m, const std::string& c) const;

  // Unsmoothed weighted count mass sum_m' CT(w,m',c)*WG(m,m'); the evidence
  // behind an abstention decision.
  double evidence_mass(const std::string& w, const SenseId& m, const std::string& c) const;

  const CooccurrenceSet* cws_for(const std::string& w) const;
  double resolved_n1(const std::string& w) const;
  double resolved_n2(const std::string& w) const;

  const ModelConfig& config() const { return config_; }
  const CountTables& counts() const { return counts_; }
  const CwsTable& cws() const { return cws_; }
  const Taxonomy& taxonomy() const { return taxonomy_; }

  friend SenseModel train_model(const std::vector<TaggedInstance>&, const SenseInventory&,
                                const Taxonomy&, const CwsTable&, const ModelConfig&);
  friend SenseModel load_model(const std::string&);
  friend void save_model(const SenseModel&, std::ostream&);

 private:
  void rebuild();

  ModelConfig config_;
  Taxonomy taxonomy_;
  CountTables counts_;
  CwsTable cws_;
  std::map<std::string, std::vector<SenseId>> base_senses_;  // word -> M(w)
  std::map<std::string, WordEntry> entries_;
};

SenseModel train_model(const std::vector<TaggedInstance>& instances, const SenseInventory& inv,
                       const Taxonomy& t, const CwsTable& cws, const ModelConfig& cfg);

// Versioned UTF-8 text with [config], [taxonomy], [senses], [cws] and
// [counts] sections; counts are exact integers and parameters are rebuilt
// on load.
void save_model(const SenseModel& model, std::ostream& out);
void save_model(const SenseModel& model, const std::string& path);
SenseModel load_model(const std::string& path);

}  // namespace wsd
