#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wsd {

using Sentence = std::vector<std::string>;

// Whitespace split, surrounding punctuation stripped, ASCII lowercased.
// Tokens that become empty are dropped.
Sentence tokenize(std::string_view line);

// Closed-class words excluded from co-occurrence: prepositions, articles,
// determiners, conjunctions.
class FunctionWordList {
 public:
  FunctionWordList() = default;
  explicit FunctionWordList(const std::vector<std::string>& words);

  // One token per line, '#' comments.
  static FunctionWordList load(const std::string& path);
  static FunctionWordList builtin_english();

  bool contains(const std::string& word) const { return words_.count(word) != 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

Sentence content_filter(const Sentence& s, const FunctionWordList& f);

// Sentence-level 2x2 table for a (target, candidate) pair; every word counts
// at most once per sentence.
struct ContingencyTable {
  std::uint64_t both = 0;     // sentences with target and candidate
  std::uint64_t w_only = 0;   // target without candidate
  std::uint64_t c_only = 0;   // candidate without target
  std::uint64_t neither = 0;

  std::uint64_t total() const { return both + w_only + c_only + neither; }
};

// Log-likelihood-ratio statistic of independence (G^2). Zero for degenerate
// tables with an empty row or column; throws on an all-zero table.
double association_score(const ContingencyTable& t);

// Accumulates sentence-presence counts for one target word. Counters over
// corpus shards merge cell-wise, so counting can be partitioned.
class CooccurrenceCounter {
 public:
  CooccurrenceCounter(std::string target, FunctionWordList function_words);

  void add(const Sentence& s);
  void merge(const CooccurrenceCounter& other);

  std::map<std::string, ContingencyTable> tables() const;
  const std::string& target() const { return target_; }
  std::uint64_t sentence_count() const { return n_sentences_; }

 private:
  struct Candidate {
    std::uint64_t in_sentences = 0;  // sentences containing the candidate
    std::uint64_t with_target = 0;   // ... that also contain the target
  };

  std::string target_;
  FunctionWordList function_words_;
  std::uint64_t n_sentences_ = 0;
  std::uint64_t n_target_ = 0;  // sentences containing the target
  std::map<std::string, Candidate> candidates_;
};

// Sentence-level contingency tables for every content word co-occurring
// with `word`. Empty sentences are not counted.
std::map<std::string, ContingencyTable> count_cooccurrence(const std::vector<Sentence>& corpus,
                                                           const std::string& word,
                                                           const FunctionWordList& f);

struct CwsConfig {
  std::uint64_t min_joint = 3;
  double score_threshold = 10.83;  // chi-square p < 0.001 at 1 df
  std::size_t top_k = 200;
};

// C(w): content words that co-occur with w significantly often.
struct CooccurrenceSet {
  struct Member {
    std::uint64_t joint = 0;
    double score = 0.0;
  };

  std::string word;
  std::map<std::string, Member> members;

  bool contains(const std::string& c) const { return members.count(c) != 0; }
  std::size_t size() const { return members.size(); }

  // Members by descending score, ties by word.
  std::vector<std::pair<std::string, Member>> ranked() const;
};

CooccurrenceSet extract_cws(const CooccurrenceCounter& counter, const CwsConfig& cfg);
CooccurrenceSet extract_cws(const std::vector<Sentence>& corpus, const std::string& word,
                            const CwsConfig& cfg, const FunctionWordList& f);

using CwsTable = std::map<std::string, CooccurrenceSet>;

// One tokenized sentence per input line (empty lines yield empty sentences,
// preserving line indices).
std::vector<Sentence> load_corpus(const std::string& path);

// One line per member: `word<TAB>cooccurring_word<TAB>joint<TAB>score`.
void save_cws(const CwsTable& table, const std::string& path);
void write_cws(const CwsTable& table, std::ostream& out);
CwsTable load_cws(const std::string& path);

}  // namespace wsd
