#include "wsd/inventory.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

SenseInventory SenseInventory::load(const std::string& path) {
  SenseInventory inv;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::vector<std::string> fields = split_fields(line, '\t');
    if (fields.size() != 3)
      throw std::runtime_error(where + ": malformed dictionary line (expected 3 tab-separated fields)");

    std::string word(trim(fields[0]));
    std::string sense(trim(fields[1]));
    if (word.empty() || sense.empty())
      throw std::runtime_error(where + ": empty word or sense id");

    std::vector<std::string> translations;
    for (const std::string& t : split_fields(fields[2], ',')) {
      std::string tr(trim(t));
      if (!tr.empty()) translations.push_back(std::move(tr));
    }
    if (translations.empty())
      throw std::runtime_error(where + ": empty translation set for sense '" + sense + "'");

    try {
      inv.add_sense(word, sense, std::move(translations));
    } catch (const std::exception& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  return inv;
}

void SenseInventory::add_sense(const std::string& word, const SenseId& sense,
                               std::vector<std::string> translations) {
  if (word.empty()) throw std::invalid_argument("empty word");
  if (sense.empty()) throw std::invalid_argument("empty sense id");

  std::sort(translations.begin(), translations.end());
  translations.erase(std::unique(translations.begin(), translations.end()), translations.end());
  translations.erase(std::remove(translations.begin(), translations.end(), std::string()),
                     translations.end());
  if (translations.empty())
    throw std::invalid_argument("empty translation set for sense '" + sense + "'");

  std::vector<Sense>& senses = entries_[word];
  for (const Sense& s : senses) {
    if (s.id == sense)
      throw std::invalid_argument("duplicate sense id '" + sense + "' under word '" + word + "'");
  }
  senses.push_back(Sense{sense, std::move(translations)});
}

bool SenseInventory::contains(const std::string& word) const {
  return entries_.count(word) != 0;
}

const std::vector<SenseInventory::Sense>& SenseInventory::senses(const std::string& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end())
    throw std::runtime_error("word not in sense inventory: '" + word + "'");
  return it->second;
}

std::vector<SenseId> SenseInventory::sense_ids(const std::string& word) const {
  std::vector<SenseId> ids;
  for (const Sense& s : senses(word)) ids.push_back(s.id);
  return ids;
}

std::vector<std::string> SenseInventory::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [word, senses] : entries_) out.push_back(word);
  return out;
}

void save_inventory(const SenseInventory& inv, const std::string& path) {
  std::ofstream out = open_output(path);
  for (const std::string& word : inv.words()) {
    for (const SenseInventory::Sense& s : inv.senses(word)) {
      out << word << '\t' << s.id << '\t';
      for (std::size_t i = 0; i < s.translations.size(); ++i) {
        if (i) out << ',';
        out << s.translations[i];
      }
      out << '\n';
    }
  }
}

}  // namespace wsd
