#include "wsd/bitext.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

namespace {

// Distinct source words whose translation (under any sense) appears in the
// target token set.
int anchor_count(const std::set<std::string>& source_words,
                 const std::set<std::string>& target_tokens, const SenseInventory& inv) {
  int anchors = 0;
  for (const std::string& w : source_words) {
    if (!inv.contains(w)) continue;
    bool hit = false;
    for (const SenseInventory::Sense& s : inv.senses(w)) {
      for (const std::string& tr : s.translations) {
        if (target_tokens.count(tr)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (hit) ++anchors;
  }
  return anchors;
}

bool length_ratio_ok(std::size_t a, std::size_t b, double max_ratio) {
  if (a == 0 || b == 0) return false;
  const double longer = static_cast<double>(std::max(a, b));
  const double shorter = static_cast<double>(std::min(a, b));
  return longer / shorter <= max_ratio;
}

}  // namespace

std::vector<BitextPair> align_sentences(const std::vector<Sentence>& source_doc,
                                        const std::vector<Sentence>& target_doc,
                                        const SenseInventory& inv, const AlignConfig& cfg) {
  if (source_doc.empty() || target_doc.empty())
    throw std::invalid_argument("align_sentences: empty document");
  if (cfg.min_anchor_count < 1)
    throw std::invalid_argument("align_sentences: min_anchor_count must be >= 1");

  const std::size_t n = source_doc.size();
  const std::size_t m = target_doc.size();

  std::vector<std::set<std::string>> src_words(n);
  for (std::size_t i = 0; i < n; ++i)
    src_words[i] = std::set<std::string>(source_doc[i].begin(), source_doc[i].end());
  std::vector<std::set<std::string>> tgt_words(m);
  for (std::size_t j = 0; j < m; ++j)
    tgt_words[j] = std::set<std::string>(target_doc[j].begin(), target_doc[j].end());

  // Pair score: anchor count when the pair qualifies, else unusable.
  std::vector<std::vector<int>> score(n, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!length_ratio_ok(source_doc[i].size(), target_doc[j].size(), cfg.max_length_ratio))
        continue;
      int a = anchor_count(src_words[i], tgt_words[j], inv);
      if (a >= cfg.min_anchor_count) score[i][j] = a;
    }
  }

  // Grid DP over prefixes; ties prefer skipping, which keeps only pairs that
  // add anchor mass.
  enum Step : unsigned char { kSkipSource, kSkipTarget, kMatch };
  std::vector<std::vector<long long>> dp(n + 1, std::vector<long long>(m + 1, 0));
  std::vector<std::vector<unsigned char>> back(n + 1, std::vector<unsigned char>(m + 1, kSkipSource));
  for (std::size_t j = 1; j <= m; ++j) back[0][j] = kSkipTarget;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      long long best = dp[i - 1][j];
      unsigned char how = kSkipSource;
      if (dp[i][j - 1] > best) {
        best = dp[i][j - 1];
        how = kSkipTarget;
      }
      if (score[i - 1][j - 1] >= 0 && dp[i - 1][j - 1] + score[i - 1][j - 1] > best) {
        best = dp[i - 1][j - 1] + score[i - 1][j - 1];
        how = kMatch;
      }
      dp[i][j] = best;
      back[i][j] = how;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> matches;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    switch (back[i][j]) {
      case kMatch:
        matches.emplace_back(i - 1, j - 1);
        --i;
        --j;
        break;
      case kSkipSource:
        --i;
        break;
      case kSkipTarget:
        --j;
        break;
    }
  }
  std::reverse(matches.begin(), matches.end());

  std::vector<BitextPair> pairs;
  pairs.reserve(matches.size());
  for (const auto& [si, tj] : matches)
    pairs.push_back(BitextPair{source_doc[si], target_doc[tj]});
  return pairs;
}

std::optional<SenseId> tag_occurrence(const BitextPair& pair, const std::string& word,
                                      const SenseInventory& inv) {
  if (!inv.contains(word)) return std::nullopt;
  const std::set<std::string> target_tokens(pair.target.begin(), pair.target.end());

  std::optional<SenseId> match;
  for (const SenseInventory::Sense& s : inv.senses(word)) {
    bool hit = false;
    for (const std::string& tr : s.translations) {
      if (target_tokens.count(tr)) {
        hit = true;
        break;
      }
    }
    if (!hit) continue;
    if (match) return std::nullopt;  // two senses match: ambiguous, drop
    match = s.id;
  }
  return match;
}

std::vector<TaggedInstance> extract_training(const std::vector<BitextPair>& bitext,
                                             const SenseInventory& inv,
                                             const FunctionWordList& f) {
  std::vector<TaggedInstance> out;
  for (const BitextPair& pair : bitext) {
    for (const std::string& token : pair.source) {
      if (!inv.contains(token)) continue;
      std::optional<SenseId> tag = tag_occurrence(pair, token, inv);
      if (!tag) continue;

      TaggedInstance inst;
      inst.word = token;
      inst.tag = *tag;
      for (const std::string& c : content_filter(pair.source, f))
        if (c != token) inst.context.insert(c);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::pair<std::vector<TaggedInstance>, std::vector<TaggedInstance>> split_instances(
    const std::vector<TaggedInstance>& instances, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw std::invalid_argument("split_instances: train_fraction must be in (0,1)");

  std::map<std::pair<std::string, SenseId>, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < instances.size(); ++i)
    strata[{instances[i].word, instances[i].tag}].push_back(i);

  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> test_idx;
  for (const auto& [key, indices] : strata) {
    std::vector<std::size_t> order = indices;
    // Per-stratum generator so the split of one stratum is independent of
    // the others' sizes.
    std::mt19937_64 rng(splitmix64(spec.seed ^ fnv1a64(key.first + "\x1f" + key.second)));
    for (std::size_t k = order.size(); k > 1; --k) {
      std::size_t r = static_cast<std::size_t>(rng() % k);
      std::swap(order[k - 1], order[r]);
    }
    const auto n_train = static_cast<std::size_t>(
        std::llround(spec.train_fraction * static_cast<double>(order.size())));
    for (std::size_t k = 0; k < order.size(); ++k)
      (k < n_train ? train_idx : test_idx).push_back(order[k]);
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  std::pair<std::vector<TaggedInstance>, std::vector<TaggedInstance>> out;
  for (std::size_t i : train_idx) out.first.push_back(instances[i]);
  for (std::size_t i : test_idx) out.second.push_back(instances[i]);
  return out;
}

void save_instances(const std::vector<TaggedInstance>& instances, const std::string& path) {
  std::ofstream out = open_output(path);
  for (const TaggedInstance& inst : instances) {
    out << inst.word << '\t' << inst.tag << '\t';
    bool first = true;
    for (const std::string& c : inst.context) {
      if (!first) out << ',';
      out << c;
      first = false;
    }
    out << '\n';
  }
}

std::vector<TaggedInstance> load_instances(const std::string& path) {
  std::vector<TaggedInstance> out;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::vector<std::string> fields = split_fields(line, '\t');
    if (fields.size() != 3)
      throw std::runtime_error(where + ": malformed instance line (expected 3 tab-separated fields)");

    TaggedInstance inst;
    inst.word = std::string(trim(fields[0]));
    inst.tag = std::string(trim(fields[1]));
    if (inst.word.empty() || inst.tag.empty())
      throw std::runtime_error(where + ": empty word or sense tag");
    for (const std::string& c : split_fields(fields[2], ',')) {
      std::string cw(trim(c));
      if (!cw.empty()) inst.context.insert(std::move(cw));
    }
    inst.context.erase(inst.word);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<BitextPair> load_prealigned_bitext(const std::string& path) {
  std::vector<BitextPair> out;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::vector<std::string> fields = split_fields(line, '\t');
    if (fields.size() != 2)
      throw std::runtime_error(where + ": malformed bitext line (expected `source<TAB>target`)");

    BitextPair pair;
    pair.source = tokenize(fields[0]);
    for (const std::string& t : split_fields(fields[1], ' '))
      if (!t.empty()) pair.target.push_back(t);
    if (pair.source.empty() || pair.target.empty())
      throw std::runtime_error(where + ": empty side in aligned pair");
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<Sentence> load_target_doc(const std::string& path) {
  std::vector<Sentence> out;
  for (const std::string& line : read_lines(path)) {
    Sentence s;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) s.push_back(t);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wsd
