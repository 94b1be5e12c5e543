#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wsd/model.hpp"

namespace wsd {

struct DecisionPolicy {
  // Decline to answer when no context word carries any training evidence
  // for any candidate sense. Lowers recall, protects precision.
  bool abstain_on_no_evidence = false;
};

struct Decision {
  std::string word;
  SenseId chosen;       // always a base sense of the word
  SenseId raw_winner;   // the argmax over S(w); may be a virtual sense
  std::map<SenseId, double> scores;  // natural-log scores over S(w)
  bool abstained = false;
  std::set<std::string> evidence;  // context words in C(w) with positive mass
};

// log P(m|w) + sum over context words in C(w) of log P(c|w,m).
double score_sense(const SenseModel& model, const std::string& word, const SenseId& m,
                   const std::set<std::string>& context);

// Argmax over S(w); ties broken by higher prior, then lexicographic sense
// id. A virtual winner is mapped back to its owning base sense.
Decision disambiguate(const SenseModel& model, const std::string& word,
                      const std::set<std::string>& context, const DecisionPolicy& policy);
Decision disambiguate(const SenseModel& model, const std::string& word, const Sentence& sentence,
                      const DecisionPolicy& policy);

struct TaggedLine {
  std::size_t line_no = 0;  // 1-based
  Decision decision;
};

// One decision per occurrence of a model word; lines without model words
// produce no records.
std::vector<TaggedLine> tag_stream(const SenseModel& model, std::istream& in,
                                   const DecisionPolicy& policy);
std::vector<TaggedLine> tag_file(const SenseModel& model, const std::string& path,
                                 const DecisionPolicy& policy);

// `line_no<TAB>word<TAB>chosen<TAB>raw_winner<TAB>abstained<TAB>score`,
// score in log10 with 6 decimals.
void write_decisions(const std::vector<TaggedLine>& decisions, std::ostream& out);

}  // namespace wsd
