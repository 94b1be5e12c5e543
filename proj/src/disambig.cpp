#include "wsd/disambig.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

double score_sense(const SenseModel& model, const std::string& word, const SenseId& m,
                   const std::set<std::string>& context) {
  double score = std::log(model.prior(word, m));
  const CooccurrenceSet* cws = model.cws_for(word);
  if (cws == nullptr) return score;
  for (const std::string& c : context)
    if (cws->contains(c)) score += std::log(model.likelihood(word, m, c));
  return score;
}

Decision disambiguate(const SenseModel& model, const std::string& word,
                      const std::set<std::string>& context, const DecisionPolicy& policy) {
  const SenseModel::WordEntry& entry = model.entry(word);

  Decision d;
  d.word = word;
  for (const SenseId& m : entry.space) d.scores[m] = score_sense(model, word, m, context);

  // Map order is lexicographic, so on full ties the smallest id wins.
  const SenseId* winner = nullptr;
  double best_score = 0.0;
  double best_prior = 0.0;
  for (const auto& [m, score] : d.scores) {
    const double prior = entry.prior.at(m);
    if (winner == nullptr || score > best_score ||
        (score == best_score && prior > best_prior)) {
      winner = &m;
      best_score = score;
      best_prior = prior;
    }
  }
  d.raw_winner = *winner;
  d.chosen = entry.ess.base_sense_of(d.raw_winner);

  const CooccurrenceSet* cws = model.cws_for(word);
  if (cws != nullptr) {
    for (const std::string& c : context) {
      if (!cws->contains(c)) continue;
      for (const SenseId& m : entry.space) {
        if (model.evidence_mass(word, m, c) > 0.0) {
          d.evidence.insert(c);
          break;
        }
      }
    }
  }
  d.abstained = policy.abstain_on_no_evidence && d.evidence.empty();
  return d;
}

Decision disambiguate(const SenseModel& model, const std::string& word, const Sentence& sentence,
                      const DecisionPolicy& policy) {
  std::set<std::string> context(sentence.begin(), sentence.end());
  context.erase(word);
  return disambiguate(model, word, context, policy);
}

std::vector<TaggedLine> tag_stream(const SenseModel& model, std::istream& in,
                                   const DecisionPolicy& policy) {
  std::vector<TaggedLine> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const Sentence sentence = tokenize(line);
    for (const std::string& token : sentence) {
      if (!model.has_word(token)) continue;
      out.push_back(TaggedLine{line_no, disambiguate(model, token, sentence, policy)});
    }
  }
  return out;
}

std::vector<TaggedLine> tag_file(const SenseModel& model, const std::string& path,
                                 const DecisionPolicy& policy) {
  std::ifstream in = open_input(path);
  return tag_stream(model, in, policy);
}

void write_decisions(const std::vector<TaggedLine>& decisions, std::ostream& out) {
  char buf[48];
  for (const TaggedLine& t : decisions) {
    const Decision& d = t.decision;
    const double log10_score = d.scores.at(d.raw_winner) / std::log(10.0);
    std::snprintf(buf, sizeof(buf), "%.6f", log10_score);
    out << t.line_no << '\t' << d.word << '\t' << d.chosen << '\t' << d.raw_winner << '\t'
        << (d.abstained ? "true" : "false") << '\t' << buf << '\n';
  }
}

}  // namespace wsd
