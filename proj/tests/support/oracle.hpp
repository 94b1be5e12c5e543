#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works directly off edge lists and raw instance lists in
// plain probability space, independent of the production code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wsd/bitext.hpp"
#include "wsd/inventory.hpp"

namespace wsd::testing {

using Edge = std::pair<wsd::SenseId, wsd::SenseId>;

inline bool oracle_isa(const std::vector<Edge>& edges, const wsd::SenseId& m,
                       const wsd::SenseId& ancestor, std::set<wsd::SenseId> seen = {}) {
  if (!seen.insert(m).second) return false;
  for (const Edge& e : edges) {
    if (e.first != m) continue;
    if (e.second == ancestor) return true;
    if (oracle_isa(edges, e.second, ancestor, seen)) return true;
  }
  return false;
}

inline std::vector<wsd::SenseId> oracle_nodes(const std::vector<Edge>& edges) {
  std::set<wsd::SenseId> all;
  for (const Edge& e : edges) {
    all.insert(e.first);
    all.insert(e.second);
  }
  return {all.begin(), all.end()};
}

// Set-builder form of E(w): every taxonomy node that is a strict ancestor of
// exactly one base sense, excluding nodes that are themselves base senses.
inline std::map<wsd::SenseId, wsd::SenseId> oracle_virtuals(
    const std::vector<wsd::SenseId>& base, const std::vector<Edge>& edges) {
  std::map<wsd::SenseId, wsd::SenseId> out;
  for (const wsd::SenseId& node : oracle_nodes(edges)) {
    if (std::find(base.begin(), base.end(), node) != base.end()) continue;
    std::vector<wsd::SenseId> covered;
    for (const wsd::SenseId& m : base)
      if (oracle_isa(edges, m, node)) covered.push_back(m);
    if (covered.size() == 1) out[node] = covered[0];
  }
  return out;
}

inline double oracle_wg(const std::vector<Edge>& edges, const wsd::SenseId& evaluated,
                        const wsd::SenseId& observed, double alpha) {
  if (evaluated == observed) return 1.0;
  return oracle_isa(edges, observed, evaluated) ? alpha : 0.0;
}

// A self-contained toy problem: one target word with its sense set, taxonomy,
// tagged instances and co-occurrence set.
struct ToySetup {
  std::string word;
  std::vector<wsd::SenseId> base;
  std::vector<Edge> edges;
  std::vector<wsd::TaggedInstance> instances;
  std::vector<std::string> cws;
  double alpha = 0.5;
  std::optional<double> n1;
  std::optional<double> n2;
  bool use_ess = true;
};

inline std::vector<wsd::SenseId> oracle_space(const ToySetup& s) {
  std::vector<wsd::SenseId> space = s.base;
  if (s.use_ess)
    for (const auto& [v, owner] : oracle_virtuals(s.base, s.edges)) space.push_back(v);
  std::sort(space.begin(), space.end());
  return space;
}

inline wsd::SenseId oracle_base_of(const ToySetup& s, const wsd::SenseId& m) {
  if (std::find(s.base.begin(), s.base.end(), m) != s.base.end()) return m;
  return oracle_virtuals(s.base, s.edges).at(m);
}

inline std::uint64_t oracle_ct_w(const ToySetup& s) {
  std::uint64_t n = 0;
  for (const auto& inst : s.instances)
    if (inst.word == s.word) ++n;
  return n;
}

inline std::uint64_t oracle_ct_wm(const ToySetup& s, const wsd::SenseId& m) {
  std::uint64_t n = 0;
  for (const auto& inst : s.instances)
    if (inst.word == s.word && inst.tag == m) ++n;
  return n;
}

inline std::uint64_t oracle_ct_wmc(const ToySetup& s, const wsd::SenseId& m,
                                   const std::string& c) {
  std::uint64_t n = 0;
  const bool in_cws = std::find(s.cws.begin(), s.cws.end(), c) != s.cws.end();
  if (!in_cws) return 0;  // counts are restricted to C(w)
  for (const auto& inst : s.instances)
    if (inst.word == s.word && inst.tag == m && inst.context.count(c)) ++n;
  return n;
}

inline double oracle_n1(const ToySetup& s) {
  return s.n1 ? *s.n1 : static_cast<double>(oracle_space(s).size());
}

inline double oracle_n2(const ToySetup& s) {
  return s.n2 ? *s.n2 : static_cast<double>(s.cws.size()) + 1.0;
}

inline double oracle_prior(const ToySetup& s, const wsd::SenseId& m) {
  double mass = 0.0;
  for (const wsd::SenseId& observed : s.base)
    mass += static_cast<double>(oracle_ct_wm(s, observed)) * oracle_wg(s.edges, m, observed, s.alpha);
  return (mass + 1.0) / (static_cast<double>(oracle_ct_w(s)) + oracle_n1(s));
}

inline double oracle_likelihood(const ToySetup& s, const wsd::SenseId& m, const std::string& c) {
  double context_mass = 0.0;
  double sense_mass = 0.0;
  for (const wsd::SenseId& observed : s.base) {
    const double wg = oracle_wg(s.edges, m, observed, s.alpha);
    sense_mass += static_cast<double>(oracle_ct_wm(s, observed)) * wg;
    context_mass += static_cast<double>(oracle_ct_wmc(s, observed, c)) * wg;
  }
  return (context_mass + 1.0) / (sense_mass + oracle_n2(s));
}

// Plain-probability-space score: P(m|w) * prod over context words in C(w).
inline double oracle_linear_score(const ToySetup& s, const wsd::SenseId& m,
                                  const std::set<std::string>& context) {
  double score = oracle_prior(s, m);
  for (const std::string& c : context)
    if (std::find(s.cws.begin(), s.cws.end(), c) != s.cws.end())
      score *= oracle_likelihood(s, m, c);
  return score;
}

struct OracleDecision {
  wsd::SenseId raw_winner;
  wsd::SenseId chosen;
  std::map<wsd::SenseId, double> linear_scores;
  bool near_tie = false;  // winner within 1e-12 relative of the runner-up
};

inline OracleDecision oracle_decide(const ToySetup& s, const std::set<std::string>& context) {
  OracleDecision d;
  for (const wsd::SenseId& m : oracle_space(s))
    d.linear_scores[m] = oracle_linear_score(s, m, context);

  const wsd::SenseId* winner = nullptr;
  double best = 0.0;
  double best_prior = 0.0;
  for (const auto& [m, score] : d.linear_scores) {
    const double prior = oracle_prior(s, m);
    if (winner == nullptr || score > best || (score == best && prior > best_prior)) {
      winner = &m;
      best = score;
      best_prior = prior;
    }
  }
  d.raw_winner = *winner;
  d.chosen = oracle_base_of(s, d.raw_winner);
  for (const auto& [m, score] : d.linear_scores) {
    if (m == d.raw_winner) continue;
    if (std::abs(score - best) <= 1e-12 * best) d.near_tie = true;
  }
  return d;
}

}  // namespace wsd::testing
