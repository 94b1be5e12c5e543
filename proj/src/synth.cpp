#include "wsd/synth.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "wsd/text_util.hpp"

namespace wsd {

namespace {

constexpr const char* kWord = "term";

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// k distinct picks via partial shuffle.
std::vector<std::string> draw_distinct(const std::vector<std::string>& pool, std::size_t k,
                                       std::mt19937_64& rng) {
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::string> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
    out.push_back(pool[idx[i]]);
  }
  return out;
}

}  // namespace

SynthData generate_synthetic(const SynthSpec& spec) {
  if (spec.senses < 1) throw std::invalid_argument("generate_synthetic: senses must be >= 1");
  if (spec.chain_depth < 0) throw std::invalid_argument("generate_synthetic: negative chain depth");
  if (spec.context_size < 1)
    throw std::invalid_argument("generate_synthetic: context_size must be >= 1");
  if (spec.vocab_per_sense < spec.context_size)
    throw std::invalid_argument(
        "generate_synthetic: vocabulary per sense smaller than context size");
  if (spec.sentences_per_sense < 1)
    throw std::invalid_argument("generate_synthetic: sentences_per_sense must be >= 1");
  if (spec.overlap < 0.0 || spec.overlap > 1.0)
    throw std::invalid_argument("generate_synthetic: overlap must be in [0,1]");
  if (spec.sparsity < 0.0 || spec.sparsity > 1.0)
    throw std::invalid_argument("generate_synthetic: sparsity must be in [0,1]");

  SynthData data;
  std::mt19937_64 rng(splitmix64(spec.seed));

  std::vector<SenseId> senses;
  for (int i = 0; i < spec.senses; ++i) senses.push_back("s" + std::to_string(i));

  for (int i = 0; i < spec.senses; ++i)
    data.inventory.add_sense(kWord, senses[i], {"tr" + std::to_string(i)});

  std::vector<Taxonomy::Edge> edges;
  for (int i = 0; i < spec.senses; ++i) {
    SenseId below = senses[i];
    for (int d = 1; d <= spec.chain_depth; ++d) {
      SenseId above = "h" + std::to_string(i) + "_" + std::to_string(d);
      edges.emplace_back(below, above);
      below = above;
    }
  }
  data.taxonomy = Taxonomy(edges);

  std::vector<std::vector<std::string>> vocab(spec.senses);
  for (int i = 0; i < spec.senses; ++i)
    for (int j = 0; j < spec.vocab_per_sense; ++j)
      vocab[i].push_back("v" + std::to_string(i) + "_" + std::to_string(j));
  std::vector<std::string> shared;
  for (int j = 0; j < spec.vocab_per_sense; ++j) shared.push_back("shared_" + std::to_string(j));

  const auto n_sparse = static_cast<int>(
      std::llround(spec.sparsity * static_cast<double>(spec.sentences_per_sense)));

  std::map<std::string, std::uint64_t> usage;
  for (int i = 0; i < spec.senses; ++i) {
    for (int j = 0; j < spec.sentences_per_sense; ++j) {
      TaggedInstance inst;
      inst.word = kWord;
      inst.tag = senses[i];
      if (j < n_sparse) {
        // One-off vocabulary: these words never recur in any other instance.
        for (int t = 0; t < spec.context_size; ++t)
          inst.context.insert("x" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                              std::to_string(t));
      } else {
        std::vector<std::string> picks =
            draw_distinct(vocab[i], static_cast<std::size_t>(spec.context_size), rng);
        for (std::string& p : picks) {
          if (spec.overlap > 0.0 && unit_real(rng) < spec.overlap) {
            std::string alt = shared[rng() % shared.size()];
            if (!inst.context.count(alt)) p = std::move(alt);
          }
          inst.context.insert(std::move(p));
        }
      }
      for (const std::string& c : inst.context) ++usage[c];
      data.instances.push_back(std::move(inst));
    }
  }

  CooccurrenceSet cws;
  cws.word = kWord;
  for (const auto& [c, n] : usage) cws.members[c] = CooccurrenceSet::Member{n, 1000.0};
  data.cws[kWord] = std::move(cws);
  return data;
}

}  // namespace wsd
