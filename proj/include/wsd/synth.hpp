#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsd/bitext.hpp"
#include "wsd/corpus.hpp"
#include "wsd/inventory.hpp"
#include "wsd/taxonomy.hpp"

namespace wsd {

// Deterministic desk-scale corpus for validating the trade-off between the
// base-sense-only and extended configurations. Each sense owns a vocabulary
// pool and a private hypernym chain; the sparsity knob yields instances
// whose context words occur nowhere else, so they carry no training
// evidence when they land in the test split.
struct SynthSpec {
  int senses = 3;
  int chain_depth = 2;          // hypernym chain length per sense
  int vocab_per_sense = 40;
  int context_size = 4;         // context words per instance
  int sentences_per_sense = 625;
  double overlap = 0.0;         // probability of drawing a shared-pool word
  double sparsity = 0.0;        // fraction of instances with one-off context words
  std::uint64_t seed = 1;
};

struct SynthData {
  std::vector<TaggedInstance> instances;
  SenseInventory inventory;
  Taxonomy taxonomy;
  CwsTable cws;
};

SynthData generate_synthetic(const SynthSpec& spec);

}  // namespace wsd
