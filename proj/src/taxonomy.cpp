#include "wsd/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

Taxonomy::Taxonomy(const std::vector<Edge>& edges) {
  for (const Edge& e : edges) add_edge(e.first, e.second);
  for (auto& [child, parents] : parents_) {
    std::sort(parents.begin(), parents.end());
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
  }
  check_acyclic();
}

Taxonomy Taxonomy::load(const std::string& path) {
  std::vector<Edge> edges;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_blank_or_comment(line)) continue;
    const std::string where = path + ":" + std::to_string(i + 1);

    std::vector<std::string> fields = split_fields(line, '\t');
    if (fields.size() != 2)
      throw std::runtime_error(where + ": malformed taxonomy line (expected `child<TAB>parent`)");
    std::string child(trim(fields[0]));
    std::string parent(trim(fields[1]));
    if (child.empty() || parent.empty())
      throw std::runtime_error(where + ": empty sense id");
    if (child == parent)
      throw std::runtime_error(where + ": self edge on '" + child + "'");
    edges.emplace_back(std::move(child), std::move(parent));
  }
  try {
    return Taxonomy(edges);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void Taxonomy::add_edge(const SenseId& child, const SenseId& parent) {
  if (child.empty() || parent.empty()) throw std::invalid_argument("empty sense id in edge");
  if (child == parent) throw std::invalid_argument("self edge on '" + child + "'");
  parents_[child].push_back(parent);
}

void Taxonomy::check_acyclic() const {
  // Kahn over the child->parent graph; leftovers mean a cycle.
  std::map<SenseId, std::size_t> out_degree;
  std::map<SenseId, std::vector<SenseId>> children_of;
  for (const auto& [child, parents] : parents_) {
    out_degree[child] += parents.size();
    for (const SenseId& p : parents) {
      children_of[p].push_back(child);
      if (!out_degree.count(p)) out_degree[p] = 0;
    }
  }
  std::vector<SenseId> ready;
  for (const auto& [node, deg] : out_degree)
    if (deg == 0) ready.push_back(node);
  std::size_t visited = 0;
  while (!ready.empty()) {
    SenseId node = ready.back();
    ready.pop_back();
    ++visited;
    auto it = children_of.find(node);
    if (it == children_of.end()) continue;
    for (const SenseId& c : it->second)
      if (--out_degree[c] == 0) ready.push_back(c);
  }
  if (visited != out_degree.size())
    throw std::invalid_argument("taxonomy contains a cycle");
}

bool Taxonomy::isa(const SenseId& m, const SenseId& ancestor) const {
  if (m == ancestor) return false;
  std::set<SenseId> seen;
  std::vector<const SenseId*> stack{&m};
  while (!stack.empty()) {
    const SenseId& cur = *stack.back();
    stack.pop_back();
    auto it = parents_.find(cur);
    if (it == parents_.end()) continue;
    for (const SenseId& p : it->second) {
      if (p == ancestor) return true;
      if (seen.insert(p).second) stack.push_back(&p);
    }
  }
  return false;
}

std::set<SenseId> Taxonomy::ancestors(const SenseId& m) const {
  std::set<SenseId> out;
  std::vector<const SenseId*> stack{&m};
  while (!stack.empty()) {
    const SenseId& cur = *stack.back();
    stack.pop_back();
    auto it = parents_.find(cur);
    if (it == parents_.end()) continue;
    for (const SenseId& p : it->second)
      if (out.insert(p).second) stack.push_back(&*out.find(p));
  }
  out.erase(m);  // a cycle-free graph never reaches m, but keep it strict
  return out;
}

const std::vector<SenseId>& Taxonomy::parents(const SenseId& m) const {
  static const std::vector<SenseId> none;
  auto it = parents_.find(m);
  return it == parents_.end() ? none : it->second;
}

std::vector<SenseId> Taxonomy::nodes() const {
  std::set<SenseId> all;
  for (const auto& [child, parents] : parents_) {
    all.insert(child);
    all.insert(parents.begin(), parents.end());
  }
  return {all.begin(), all.end()};
}

std::vector<Taxonomy::Edge> Taxonomy::edges() const {
  std::vector<Edge> out;
  for (const auto& [child, parents] : parents_)
    for (const SenseId& p : parents) out.emplace_back(child, p);
  return out;
}

std::size_t Taxonomy::edge_count() const {
  std::size_t n = 0;
  for (const auto& [child, parents] : parents_) n += parents.size();
  return n;
}

double hypernym_weight(const Taxonomy& t, const SenseId& evaluated,
                       const SenseId& observed, double alpha) {
  if (evaluated == observed) return 1.0;
  return t.isa(observed, evaluated) ? alpha : 0.0;
}

bool ExtendedSenseSet::contains(const SenseId& m) const {
  return is_base(m) || virtuals.count(m) != 0;
}

bool ExtendedSenseSet::is_base(const SenseId& m) const {
  return std::find(base.begin(), base.end(), m) != base.end();
}

const SenseId& ExtendedSenseSet::base_sense_of(const SenseId& m) const {
  auto it = std::find(base.begin(), base.end(), m);
  if (it != base.end()) return *it;
  auto vit = virtuals.find(m);
  if (vit != virtuals.end()) return vit->second;
  throw std::invalid_argument("sense '" + m + "' not in extended sense set of '" + word + "'");
}

std::vector<SenseId> ExtendedSenseSet::all() const {
  std::vector<SenseId> out = base;
  for (const auto& [v, owner] : virtuals) out.push_back(v);
  return out;
}

ExtendedSenseSet extended_sense_set(const std::vector<SenseId>& base_senses,
                                    const Taxonomy& t, const std::string& word) {
  ExtendedSenseSet ess;
  ess.word = word;
  ess.base = base_senses;

  // An ancestor qualifies as a virtual sense only when it covers exactly one
  // base sense; shared ancestors cannot be mapped back unambiguously.
  std::map<SenseId, std::pair<int, SenseId>> cover;  // ancestor -> (count, first owner)
  for (const SenseId& m : base_senses) {
    for (const SenseId& a : t.ancestors(m)) {
      auto& entry = cover[a];
      if (entry.first++ == 0) entry.second = m;
    }
  }
  const std::set<SenseId> base_set(base_senses.begin(), base_senses.end());
  for (const auto& [a, entry] : cover) {
    if (entry.first == 1 && !base_set.count(a)) ess.virtuals[a] = entry.second;
  }
  return ess;
}

ExtendedSenseSet extended_sense_set(const SenseInventory& inv, const Taxonomy& t,
                                    const std::string& word) {
  return extended_sense_set(inv.sense_ids(word), t, word);
}

void save_taxonomy(const Taxonomy& t, const std::string& path) {
  std::ofstream out = open_output(path);
  for (const auto& [child, parent] : t.edges()) out << child << '\t' << parent << '\n';
}

}  // namespace wsd
