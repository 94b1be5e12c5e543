#include "wsd/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

Sentence tokenize(std::string_view line) {
  Sentence tokens;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start) break;

    std::size_t b = start;
    std::size_t e = i;
    while (b < e && std::ispunct(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(line[e - 1]))) --e;
    if (b == e) continue;

    std::string token(line.substr(b, e - b));
    for (char& c : token) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    tokens.push_back(std::move(token));
  }
  return tokens;
}

FunctionWordList::FunctionWordList(const std::vector<std::string>& words)
    : words_(words.begin(), words.end()) {}

FunctionWordList FunctionWordList::load(const std::string& path) {
  std::vector<std::string> words;
  for (const std::string& line : read_lines(path)) {
    if (is_blank_or_comment(line)) continue;
    words.emplace_back(trim(line));
  }
  return FunctionWordList(words);
}

FunctionWordList FunctionWordList::builtin_english() {
  // Prepositions, articles, determiners, conjunctions.
  static const std::vector<std::string> kWords = {
      "a",       "an",      "the",
      "and",     "or",      "but",     "nor",     "so",      "yet",
      "if",      "because", "although", "though",  "while",   "whereas",
      "of",      "in",      "to",      "with",    "on",      "at",
      "by",      "from",    "about",   "as",      "into",    "onto",
      "over",    "after",   "under",   "between", "through", "during",
      "before",  "against", "among",   "without", "within",  "upon",
      "toward",  "towards", "off",     "above",   "below",   "near",
      "since",   "until",   "across",  "behind",  "beyond",  "per",
      "via",     "up",      "down",    "out",     "around",  "along",
      "this",    "that",    "these",   "those",   "each",    "every",
      "some",    "any",     "no",      "all",     "both",    "few",
      "several", "many",    "much",    "more",    "most",    "other",
      "another", "such",    "what",    "which",   "whose",   "either",
      "neither", "enough",  "its",     "their",   "his",     "her",
      "my",      "your",    "our"};
  return FunctionWordList(kWords);
}

Sentence content_filter(const Sentence& s, const FunctionWordList& f) {
  Sentence out;
  out.reserve(s.size());
  for (const std::string& t : s)
    if (!f.contains(t)) out.push_back(t);
  return out;
}

double association_score(const ContingencyTable& t) {
  const double n11 = static_cast<double>(t.both);
  const double n10 = static_cast<double>(t.w_only);
  const double n01 = static_cast<double>(t.c_only);
  const double n00 = static_cast<double>(t.neither);
  const double n = n11 + n10 + n01 + n00;
  if (n <= 0.0) throw std::invalid_argument("association_score: all-zero contingency table");

  const double r1 = n11 + n10;
  const double r2 = n01 + n00;
  const double c1 = n11 + n01;
  const double c2 = n10 + n00;
  if (r1 == 0.0 || r2 == 0.0 || c1 == 0.0 || c2 == 0.0) return 0.0;

  auto term = [n](double observed, double row, double col) {
    if (observed <= 0.0) return 0.0;
    return observed * std::log(observed * n / (row * col));
  };
  double g = term(n11, r1, c1) + term(n10, r1, c2) + term(n01, r2, c1) + term(n00, r2, c2);
  return std::max(0.0, 2.0 * g);
}

CooccurrenceCounter::CooccurrenceCounter(std::string target, FunctionWordList function_words)
    : target_(std::move(target)), function_words_(std::move(function_words)) {}

void CooccurrenceCounter::add(const Sentence& s) {
  ++n_sentences_;
  bool has_target = false;
  std::set<std::string> content;
  for (const std::string& tok : s) {
    if (tok == target_) {
      has_target = true;
      continue;
    }
    if (!function_words_.contains(tok)) content.insert(tok);
  }
  if (has_target) ++n_target_;
  for (const std::string& c : content) {
    Candidate& cand = candidates_[c];
    ++cand.in_sentences;
    if (has_target) ++cand.with_target;
  }
}

void CooccurrenceCounter::merge(const CooccurrenceCounter& other) {
  if (other.target_ != target_)
    throw std::invalid_argument("cannot merge counters for different target words");
  n_sentences_ += other.n_sentences_;
  n_target_ += other.n_target_;
  for (const auto& [word, cand] : other.candidates_) {
    Candidate& mine = candidates_[word];
    mine.in_sentences += cand.in_sentences;
    mine.with_target += cand.with_target;
  }
}

std::map<std::string, ContingencyTable> CooccurrenceCounter::tables() const {
  std::map<std::string, ContingencyTable> out;
  for (const auto& [word, cand] : candidates_) {
    ContingencyTable t;
    t.both = cand.with_target;
    t.w_only = n_target_ - cand.with_target;
    t.c_only = cand.in_sentences - cand.with_target;
    t.neither = n_sentences_ - n_target_ - t.c_only;
    out.emplace(word, t);
  }
  return out;
}

std::vector<std::pair<std::string, CooccurrenceSet::Member>> CooccurrenceSet::ranked() const {
  std::vector<std::pair<std::string, Member>> out(members.begin(), members.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second.score != b.second.score) return a.second.score > b.second.score;
    return a.first < b.first;
  });
  return out;
}

CooccurrenceSet extract_cws(const CooccurrenceCounter& counter, const CwsConfig& cfg) {
  if (cfg.min_joint < 1) throw std::invalid_argument("extract_cws: min_joint must be >= 1");
  if (cfg.top_k < 1) throw std::invalid_argument("extract_cws: top_k must be >= 1");

  struct Scored {
    std::string word;
    std::uint64_t joint;
    double score;
  };
  std::vector<Scored> passed;
  for (const auto& [word, table] : counter.tables()) {
    if (table.both < cfg.min_joint) continue;
    double score = association_score(table);
    if (score < cfg.score_threshold) continue;
    passed.push_back(Scored{word, table.both, score});
  }
  std::sort(passed.begin(), passed.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  if (passed.size() > cfg.top_k) passed.resize(cfg.top_k);

  CooccurrenceSet cws;
  cws.word = counter.target();
  for (const Scored& s : passed)
    cws.members.emplace(s.word, CooccurrenceSet::Member{s.joint, s.score});
  return cws;
}

std::map<std::string, ContingencyTable> count_cooccurrence(const std::vector<Sentence>& corpus,
                                                           const std::string& word,
                                                           const FunctionWordList& f) {
  CooccurrenceCounter counter(word, f);
  for (const Sentence& s : corpus)
    if (!s.empty()) counter.add(s);
  return counter.tables();
}

CooccurrenceSet extract_cws(const std::vector<Sentence>& corpus, const std::string& word,
                            const CwsConfig& cfg, const FunctionWordList& f) {
  CooccurrenceCounter counter(word, f);
  for (const Sentence& s : corpus)
    if (!s.empty()) counter.add(s);
  return extract_cws(counter, cfg);
}

std::vector<Sentence> load_corpus(const std::string& path) {
  std::vector<Sentence> out;
  for (const std::string& line : read_lines(path)) out.push_back(tokenize(line));
  return out;
}

void write_cws(const CwsTable& table, std::ostream& out) {
  char buf[64];
  for (const auto& [word, cws] : table) {
    for (const auto& [member, m] : cws.ranked()) {
      std::snprintf(buf, sizeof(buf), "%.6f", m.score);
      out << word << '\t' << member << '\t' << m.joint << '\t' << buf << '\n';
    }
  }
}

void save_cws(const CwsTable& table, const std::string& path) {
  std::ofstream out = open_output(path);
  write_cws(table, out);
}

CwsTable load_cws(const std::string& path) {
  CwsTable table;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::vector<std::string> fields = split_fields(line, '\t');
    if (fields.size() != 4)
      throw std::runtime_error(where + ": malformed co-occurrence line (expected 4 fields)");
    std::string word(trim(fields[0]));
    std::string member(trim(fields[1]));
    if (word.empty() || member.empty()) throw std::runtime_error(where + ": empty field");

    CooccurrenceSet& cws = table[word];
    cws.word = word;
    CooccurrenceSet::Member m;
    m.joint = parse_count(fields[2], where);
    m.score = parse_real(fields[3], where);
    if (!cws.members.emplace(member, m).second)
      throw std::runtime_error(where + ": duplicate member '" + member + "' for '" + word + "'");
  }
  return table;
}

}  // namespace wsd
