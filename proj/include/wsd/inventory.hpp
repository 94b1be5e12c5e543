#pragma once

#include <map>
#include <string>
#include <vector>

namespace wsd {

// Semantic tag identifier. Unique within a taxonomy, compared by exact
// string equality.
using SenseId = std::string;

// Bilingual dictionary role: for each source word, its sense set M(w) and
// the target-language translation words of each sense.
class SenseInventory {
 public:
  struct Sense {
    SenseId id;
    std::vector<std::string> translations;  // sorted, deduplicated, non-empty
  };

  // File format: one sense per line, `word<TAB>sense_id<TAB>tr1[,tr2...]`.
  // '#' starts a comment line.
  static SenseInventory load(const std::string& path);

  // Rejects duplicate sense ids under one word and empty translation sets.
  void add_sense(const std::string& word, const SenseId& sense,
                 std::vector<std::string> translations);

  bool contains(const std::string& word) const;
  const std::vector<Sense>& senses(const std::string& word) const;

  // M(w), in dictionary order.
  std::vector<SenseId> sense_ids(const std::string& word) const;

  std::vector<std::string> words() const;
  std::size_t word_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::vector<Sense>> entries_;
};

void save_inventory(const SenseInventory& inv, const std::string& path);

}  // namespace wsd
