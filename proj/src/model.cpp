#include "wsd/model.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

namespace {

constexpr const char* kModelMagic = "wsd-model";
constexpr int kModelVersion = 1;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_bool(const std::string& value, const std::string& context) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::runtime_error(context + ": expected true/false, got '" + value + "'");
}

}  // namespace

void CountTables::add(const TaggedInstance& inst, const CooccurrenceSet* cws,
                      bool cws_restrict) {
  WordCounts& wc = words_[inst.word];
  ++wc.total;
  ++wc.by_sense[inst.tag];
  auto& per_context = wc.by_sense_context[inst.tag];
  for (const std::string& c : inst.context) {
    if (c == inst.word) continue;
    if (cws_restrict && (cws == nullptr || !cws->contains(c))) continue;
    ++per_context[c];
  }
}

void CountTables::merge(const CountTables& other) {
  for (const auto& [word, wc] : other.words_) {
    WordCounts& mine = words_[word];
    mine.total += wc.total;
    for (const auto& [sense, n] : wc.by_sense) mine.by_sense[sense] += n;
    for (const auto& [sense, contexts] : wc.by_sense_context) {
      auto& my_contexts = mine.by_sense_context[sense];
      for (const auto& [c, n] : contexts) my_contexts[c] += n;
    }
  }
}

std::uint64_t CountTables::word_total(const std::string& w) const {
  auto it = words_.find(w);
  return it == words_.end() ? 0 : it->second.total;
}

std::uint64_t CountTables::sense_count(const std::string& w, const SenseId& m) const {
  auto it = words_.find(w);
  if (it == words_.end()) return 0;
  auto sit = it->second.by_sense.find(m);
  return sit == it->second.by_sense.end() ? 0 : sit->second;
}

std::uint64_t CountTables::sense_context_count(const std::string& w, const SenseId& m,
                                               const std::string& c) const {
  auto it = words_.find(w);
  if (it == words_.end()) return 0;
  auto sit = it->second.by_sense_context.find(m);
  if (sit == it->second.by_sense_context.end()) return 0;
  auto cit = sit->second.find(c);
  return cit == sit->second.end() ? 0 : cit->second;
}

const std::map<SenseId, std::uint64_t>& CountTables::senses_of(const std::string& w) const {
  static const std::map<SenseId, std::uint64_t> none;
  auto it = words_.find(w);
  return it == words_.end() ? none : it->second.by_sense;
}

const std::map<std::string, std::uint64_t>& CountTables::contexts_of(const std::string& w,
                                                                     const SenseId& m) const {
  static const std::map<std::string, std::uint64_t> none;
  auto it = words_.find(w);
  if (it == words_.end()) return none;
  auto sit = it->second.by_sense_context.find(m);
  return sit == it->second.by_sense_context.end() ? none : sit->second;
}

std::vector<std::string> CountTables::words() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (const auto& [word, wc] : words_) out.push_back(word);
  return out;
}

void CountTables::set_sense_count(const std::string& w, const SenseId& m, std::uint64_t n) {
  WordCounts& wc = words_[w];
  std::uint64_t& slot = wc.by_sense[m];
  wc.total += n - slot;
  slot = n;
}

void CountTables::set_sense_context_count(const std::string& w, const SenseId& m,
                                          const std::string& c, std::uint64_t n) {
  words_[w].by_sense_context[m][c] = n;
}

CountTables accumulate_counts(const std::vector<TaggedInstance>& instances,
                              const SenseInventory& inv, const CwsTable& cws,
                              const ModelConfig& cfg) {
  CountTables ct;
  for (const TaggedInstance& inst : instances) {
    if (!inv.contains(inst.word))
      throw std::runtime_error("instance word not in inventory: '" + inst.word + "'");
    const std::vector<SenseId> senses = inv.sense_ids(inst.word);
    if (std::find(senses.begin(), senses.end(), inst.tag) == senses.end())
      throw std::runtime_error("instance tag '" + inst.tag + "' not a sense of '" +
                               inst.word + "'");
    auto cit = cws.find(inst.word);
    ct.add(inst, cit == cws.end() ? nullptr : &cit->second, cfg.cws_restrict);
  }
  return ct;
}

double estimate_prior(const CountTables& ct, const Taxonomy& t, const std::string& w,
                      const SenseId& m, std::size_t space_size, const ModelConfig& cfg) {
  double mass = 0.0;
  for (const auto& [observed, n] : ct.senses_of(w))
    mass += static_cast<double>(n) * hypernym_weight(t, m, observed, cfg.alpha);
  const double n1 = cfg.n1.value_or(static_cast<double>(space_size));
  return (mass + 1.0) / (static_cast<double>(ct.word_total(w)) + n1);
}

double estimate_likelihood(const CountTables& ct, const Taxonomy& t, const std::string& w,
                           const SenseId& m, const std::string& c, std::size_t cws_size,
                           const ModelConfig& cfg) {
  double context_mass = 0.0;
  double sense_mass = 0.0;
  for (const auto& [observed, n] : ct.senses_of(w)) {
    const double wg = hypernym_weight(t, m, observed, cfg.alpha);
    if (wg == 0.0) continue;
    sense_mass += static_cast<double>(n) * wg;
    context_mass += static_cast<double>(ct.sense_context_count(w, observed, c)) * wg;
  }
  const double n2 = cfg.n2.value_or(static_cast<double>(cws_size) + 1.0);
  return (context_mass + 1.0) / (sense_mass + n2);
}

bool SenseModel::has_word(const std::string& w) const { return entries_.count(w) != 0; }

const SenseModel::WordEntry& SenseModel::entry(const std::string& w) const {
  auto it = entries_.find(w);
  if (it == entries_.end()) throw std::runtime_error("word not in model: '" + w + "'");
  return it->second;
}

std::vector<std::string> SenseModel::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [word, e] : entries_) out.push_back(word);
  return out;
}

double SenseModel::prior(const std::string& w, const SenseId& m) const {
  const WordEntry& e = entry(w);
  auto it = e.prior.find(m);
  if (it == e.prior.end())
    throw std::invalid_argument("sense '" + m + "' not in S(" + w + ")");
  return it->second;
}

double SenseModel::likelihood(const std::string& w, const SenseId& m,
                              const std::string& c) const {
  const WordEntry& e = entry(w);
  auto it = e.likelihood.find(m);
  if (it == e.likelihood.end())
    throw std::invalid_argument("sense '" + m + "' not in S(" + w + ")");
  auto cit = it->second.find(c);
  if (cit == it->second.end())
    throw std::invalid_argument("context word '" + c + "' not in C(" + w + ")");
  return cit->second;
}

double SenseModel::evidence_mass(const std::string& w, const SenseId& m,
                                 const std::string& c) const {
  double mass = 0.0;
  for (const auto& [observed, n] : counts_.senses_of(w)) {
    const double wg = hypernym_weight(taxonomy_, m, observed, config_.alpha);
    if (wg == 0.0) continue;
    mass += static_cast<double>(counts_.sense_context_count(w, observed, c)) * wg;
  }
  return mass;
}

const CooccurrenceSet* SenseModel::cws_for(const std::string& w) const {
  auto it = cws_.find(w);
  return it == cws_.end() ? nullptr : &it->second;
}

double SenseModel::resolved_n1(const std::string& w) const {
  return config_.n1.value_or(static_cast<double>(entry(w).space.size()));
}

double SenseModel::resolved_n2(const std::string& w) const {
  const CooccurrenceSet* cw = cws_for(w);
  return config_.n2.value_or(static_cast<double>(cw ? cw->members.size() : 0) + 1.0);
}

void SenseModel::rebuild() {
  entries_.clear();
  for (const auto& [word, base] : base_senses_) {
    WordEntry e;
    e.ess = extended_sense_set(base, taxonomy_, word);
    e.space = config_.use_ess ? e.ess.all() : base;

    const CooccurrenceSet* cw = cws_for(word);
    const std::size_t cws_size = cw ? cw->members.size() : 0;
    for (const SenseId& m : e.space) {
      e.prior[m] = estimate_prior(counts_, taxonomy_, word, m, e.space.size(), config_);
      if (cw) {
        auto& per_context = e.likelihood[m];
        for (const auto& [c, member] : cw->members)
          per_context[c] = estimate_likelihood(counts_, taxonomy_, word, m, c, cws_size, config_);
      } else {
        e.likelihood[m];  // present but empty: prior-only word
      }
    }
    entries_[word] = std::move(e);
  }
}

SenseModel train_model(const std::vector<TaggedInstance>& instances, const SenseInventory& inv,
                       const Taxonomy& t, const CwsTable& cws, const ModelConfig& cfg) {
  if (cfg.alpha < 0.0 || cfg.alpha > 1.0)
    throw std::invalid_argument("train_model: alpha must be in [0,1]");
  if ((cfg.n1 && *cfg.n1 <= 0.0) || (cfg.n2 && *cfg.n2 <= 0.0))
    throw std::invalid_argument("train_model: smoothing constants must be positive");

  SenseModel model;
  model.config_ = cfg;
  model.taxonomy_ = t;
  model.cws_ = cws;
  model.counts_ = accumulate_counts(instances, inv, cws, cfg);
  for (const std::string& word : inv.words()) model.base_senses_[word] = inv.sense_ids(word);
  model.rebuild();
  return model;
}

void save_model(const SenseModel& model, std::ostream& out) {
  out << kModelMagic << ' ' << kModelVersion << '\n';

  const ModelConfig& cfg = model.config_;
  out << "[config]\n";
  out << "alpha = " << format_real(cfg.alpha) << '\n';
  out << "n1 = " << (cfg.n1 ? format_real(*cfg.n1) : "auto") << '\n';
  out << "n2 = " << (cfg.n2 ? format_real(*cfg.n2) : "auto") << '\n';
  out << "use_ess = " << (cfg.use_ess ? "true" : "false") << '\n';
  out << "cws_restrict = " << (cfg.cws_restrict ? "true" : "false") << '\n';

  out << "[taxonomy]\n";
  for (const auto& [child, parent] : model.taxonomy_.edges())
    out << child << '\t' << parent << '\n';

  out << "[senses]\n";
  for (const auto& [word, base] : model.base_senses_)
    for (const SenseId& m : base) out << word << '\t' << m << '\n';

  out << "[cws]\n";
  for (const auto& [word, cws] : model.cws_)
    for (const auto& [c, member] : cws.members)
      out << word << '\t' << c << '\t' << member.joint << '\t' << format_real(member.score)
          << '\n';

  out << "[counts]\n";
  for (const std::string& word : model.counts_.words()) {
    for (const auto& [sense, n] : model.counts_.senses_of(word))
      out << word << '\t' << sense << '\t' << n << '\n';
    for (const auto& [sense, n] : model.counts_.senses_of(word))
      for (const auto& [c, cn] : model.counts_.contexts_of(word, sense))
        out << word << '\t' << sense << '\t' << c << '\t' << cn << '\n';
  }
}

void save_model(const SenseModel& model, const std::string& path) {
  std::ofstream out = open_output(path);
  save_model(model, out);
}

SenseModel load_model(const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw std::runtime_error(path + ": empty model file");

  {
    std::vector<std::string> head = split_fields(trim(lines[0]), ' ');
    if (head.size() != 2 || head[0] != kModelMagic)
      throw std::runtime_error(path + ": not a model file (bad header)");
    if (head[1] != std::to_string(kModelVersion))
      throw std::runtime_error(path + ": unsupported model file version '" + head[1] + "'");
  }

  SenseModel model;
  std::vector<Taxonomy::Edge> edges;
  std::string section;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::string_view t = trim(line);
    if (t.front() == '[') {
      if (t.back() != ']') throw std::runtime_error(where + ": malformed section header");
      section = std::string(t.substr(1, t.size() - 2));
      if (section != "config" && section != "taxonomy" && section != "senses" &&
          section != "cws" && section != "counts")
        throw std::runtime_error(where + ": unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) throw std::runtime_error(where + ": content before first section");

    if (section == "config") {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw std::runtime_error(where + ": expected `key = value`");
      std::string key(trim(line.substr(0, eq)));
      std::string value(trim(line.substr(eq + 1)));
      if (key == "alpha") {
        model.config_.alpha = parse_real(value, where);
      } else if (key == "n1" || key == "n2") {
        std::optional<double>& slot = (key == "n1") ? model.config_.n1 : model.config_.n2;
        slot = (value == "auto") ? std::nullopt
                                 : std::optional<double>(parse_real(value, where));
      } else if (key == "use_ess") {
        model.config_.use_ess = parse_bool(value, where);
      } else if (key == "cws_restrict") {
        model.config_.cws_restrict = parse_bool(value, where);
      } else {
        throw std::runtime_error(where + ": unknown config key '" + key + "'");
      }
    } else if (section == "taxonomy") {
      std::vector<std::string> fields = split_fields(line, '\t');
      if (fields.size() != 2) throw std::runtime_error(where + ": expected `child<TAB>parent`");
      edges.emplace_back(std::string(trim(fields[0])), std::string(trim(fields[1])));
    } else if (section == "senses") {
      std::vector<std::string> fields = split_fields(line, '\t');
      if (fields.size() != 2) throw std::runtime_error(where + ": expected `word<TAB>sense`");
      model.base_senses_[std::string(trim(fields[0]))].push_back(std::string(trim(fields[1])));
    } else if (section == "cws") {
      std::vector<std::string> fields = split_fields(line, '\t');
      if (fields.size() != 4)
        throw std::runtime_error(where + ": expected `word<TAB>member<TAB>joint<TAB>score`");
      const std::string word(trim(fields[0]));
      CooccurrenceSet& cws = model.cws_[word];
      cws.word = word;
      cws.members[std::string(trim(fields[1]))] =
          CooccurrenceSet::Member{parse_count(fields[2], where), parse_real(fields[3], where)};
    } else {  // counts
      std::vector<std::string> fields = split_fields(line, '\t');
      if (fields.size() == 3) {
        model.counts_.set_sense_count(std::string(trim(fields[0])), std::string(trim(fields[1])),
                                      parse_count(fields[2], where));
      } else if (fields.size() == 4) {
        model.counts_.set_sense_context_count(
            std::string(trim(fields[0])), std::string(trim(fields[1])),
            std::string(trim(fields[2])), parse_count(fields[3], where));
      } else {
        throw std::runtime_error(where + ": malformed count line");
      }
    }
  }

  try {
    model.taxonomy_ = Taxonomy(edges);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  model.rebuild();
  return model;
}

}  // namespace wsd
