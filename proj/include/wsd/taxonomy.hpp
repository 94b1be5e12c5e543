#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsd/inventory.hpp"

namespace wsd {

// Directed acyclic is-a graph over sense ids. An edge (child, parent) says
// the parent concept generalizes the child. Immutable after construction.
class Taxonomy {
 public:
  using Edge = std::pair<SenseId, SenseId>;  // (child, parent)

  Taxonomy() = default;
  explicit Taxonomy(const std::vector<Edge>& edges);
  Taxonomy(std::initializer_list<Edge> edges)
      : Taxonomy(std::vector<Edge>(edges.begin(), edges.end())) {}

  // File format: one edge per line, `child<TAB>parent`. '#' starts a comment.
  static Taxonomy load(const std::string& path);

  // Strict ancestry: true iff `ancestor` is reachable from `m` via one or
  // more parent edges. isa(m, m) is always false.
  bool isa(const SenseId& m, const SenseId& ancestor) const;

  // All strict ancestors of m.
  std::set<SenseId> ancestors(const SenseId& m) const;

  const std::vector<SenseId>& parents(const SenseId& m) const;

  // Every id mentioned by an edge, sorted.
  std::vector<SenseId> nodes() const;

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  bool empty() const { return parents_.empty(); }

 private:
  void add_edge(const SenseId& child, const SenseId& parent);
  void check_acyclic() const;

  std::map<SenseId, std::vector<SenseId>> parents_;  // child -> sorted parents
};

// Count-transfer weight between an evaluated tag and an observed base tag:
// 1 when equal, alpha when `evaluated` is a strict ancestor of `observed`,
// 0 otherwise. This is what lets a hypernym tag inherit the training counts
// of the base sense below it.
double hypernym_weight(const Taxonomy& t, const SenseId& evaluated,
                       const SenseId& observed, double alpha);

// E(w): the base senses M(w) plus every taxonomy node that is a strict
// ancestor of exactly one base sense. Such "virtual" senses are usable as
// answers and map back to the unique base sense they own.
struct ExtendedSenseSet {
  std::string word;
  std::vector<SenseId> base;              // M(w), dictionary order
  std::map<SenseId, SenseId> virtuals;    // virtual sense -> owning base sense

  bool contains(const SenseId& m) const;
  bool is_base(const SenseId& m) const;

  // m itself for a base sense, the owner for a virtual one. Throws when
  // m is not in E(w).
  const SenseId& base_sense_of(const SenseId& m) const;

  // Base senses in dictionary order, then virtuals in sorted order.
  std::vector<SenseId> all() const;
  std::size_t size() const { return base.size() + virtuals.size(); }
};

ExtendedSenseSet extended_sense_set(const std::vector<SenseId>& base_senses,
                                    const Taxonomy& t, const std::string& word);
ExtendedSenseSet extended_sense_set(const SenseInventory& inv, const Taxonomy& t,
                                    const std::string& word);

void save_taxonomy(const Taxonomy& t, const std::string& path);

}  // namespace wsd
