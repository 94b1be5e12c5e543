#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsd/corpus.hpp"
#include "wsd/inventory.hpp"

namespace wsd {

// One aligned sentence pair. Target tokens are opaque strings; the method
// only needs membership tests against dictionary translation words.
struct BitextPair {
  Sentence source;
  Sentence target;
};

struct AlignConfig {
  int min_anchor_count = 2;      // dictionary anchors required per pair
  double max_length_ratio = 2.5;  // longer side / shorter side
};

// Monotone 1-1 alignment: the index-increasing chain of qualifying pairs
// that maximizes the total anchor count. A pair qualifies when it has at
// least min_anchor_count anchors (distinct source words with a dictionary
// translation present in the target sentence) and an acceptable length
// ratio. Unmatched sentences are dropped; recall loss is accepted.
std::vector<BitextPair> align_sentences(const std::vector<Sentence>& source_doc,
                                        const std::vector<Sentence>& target_doc,
                                        const SenseInventory& inv, const AlignConfig& cfg);

// The sense of `word` whose translation appears in the target sentence,
// provided exactly one sense matches. Zero or two-plus matches yield
// nothing: precision over recall.
std::optional<SenseId> tag_occurrence(const BitextPair& pair, const std::string& word,
                                      const SenseInventory& inv);

// One automatically sense-tagged occurrence of an inventory word, with the
// content words of its source sentence as context.
struct TaggedInstance {
  std::string word;
  SenseId tag;
  std::set<std::string> context;

  bool operator==(const TaggedInstance&) const = default;
};

std::vector<TaggedInstance> extract_training(const std::vector<BitextPair>& bitext,
                                             const SenseInventory& inv,
                                             const FunctionWordList& f);

struct SplitSpec {
  double train_fraction = 0.8;  // in (0,1)
  std::uint64_t seed = 0;
};

// Seeded stratified split per (word, tag): each stratum is permuted and cut
// at round(train_fraction * n). Train and test partition the input.
std::pair<std::vector<TaggedInstance>, std::vector<TaggedInstance>> split_instances(
    const std::vector<TaggedInstance>& instances, const SplitSpec& spec);

// Instance file: `word<TAB>sense<TAB>ctx1[,ctx2...]` per line (third field
// may be empty). Also the direct input format for training.
void save_instances(const std::vector<TaggedInstance>& instances, const std::string& path);
std::vector<TaggedInstance> load_instances(const std::string& path);

// Pre-aligned bitext: `source<TAB>target` per line. The source side is
// tokenized; the target side is split on whitespace only.
std::vector<BitextPair> load_prealigned_bitext(const std::string& path);

// Target-language document: one sentence per line, whitespace tokens.
std::vector<Sentence> load_target_doc(const std::string& path);

}  // namespace wsd
