#include "wsd/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wsd/disambig.hpp"
#include "wsd/eval.hpp"
#include "wsd/model.hpp"
#include "wsd/synth.hpp"
#include "wsd/text_util.hpp"

namespace wsd {

namespace {

FunctionWordList function_words_from(const std::string& path) {
  return path.empty() ? FunctionWordList::builtin_english() : FunctionWordList::load(path);
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out = open_output(path);
    out << text;
  }
}

struct ModelFlags {
  double alpha = 0.5;
  std::string n1 = "auto";
  std::string n2 = "auto";
  bool use_ess = true;
  bool cws_restrict = true;
};

void add_model_flags(CLI::App& cmd, ModelFlags& flags) {
  cmd.add_option("--alpha", flags.alpha, "Hypernym count-transfer factor in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--n1", flags.n1, "Prior smoothing constant, or 'auto' for |S(w)|");
  cmd.add_option("--n2", flags.n2, "Likelihood smoothing constant, or 'auto' for |C(w)|+1");
  cmd.add_flag("--use-ess,!--no-use-ess", flags.use_ess,
               "Score over the extended sense set (default on)");
  cmd.add_flag("--cws-restrict,!--no-cws-restrict", flags.cws_restrict,
               "Ignore context words outside C(w) (default on)");
}

ModelConfig to_config(const ModelFlags& flags) {
  ModelConfig cfg;
  cfg.alpha = flags.alpha;
  if (flags.n1 != "auto") cfg.n1 = parse_real(flags.n1, "--n1");
  if (flags.n2 != "auto") cfg.n2 = parse_real(flags.n2, "--n2");
  cfg.use_ess = flags.use_ess;
  cfg.cws_restrict = flags.cws_restrict;
  return cfg;
}

// 0 = unset, 1 = abstain, -1 = answer everything.
void add_abstain_flag(CLI::App& cmd, int& abstain) {
  cmd.add_flag("--abstain{1},--no-abstain{-1}", abstain,
               "Abstain on items without co-occurrence evidence (default: on for "
               "base-sense models, off for extended ones)");
}

DecisionPolicy resolve_policy(int abstain, bool use_ess) {
  DecisionPolicy policy;
  policy.abstain_on_no_evidence = abstain == 0 ? !use_ess : abstain > 0;
  return policy;
}

int run_cws(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    std::string corpus, dict, function_words, out;
    std::vector<std::string> words;
    CwsConfig cfg;
  } opt;
  app.add_option("--corpus", opt.corpus, "Raw corpus, one sentence per line")->required();
  app.add_option("--words", opt.words, "Target words (comma separated)")->delimiter(',');
  app.add_option("--dict", opt.dict, "Take target words from this dictionary");
  app.add_option("--function-words", opt.function_words,
                 "Function word list (default: built-in English)");
  app.add_option("--min-joint", opt.cfg.min_joint, "Minimum joint sentence count");
  app.add_option("--threshold", opt.cfg.score_threshold, "Association score threshold");
  app.add_option("--top-k", opt.cfg.top_k, "Keep at most k members per word");
  app.add_option("-o,--out", opt.out, "Output file (default: stdout)");
  parse(app);

  std::vector<std::string> targets = opt.words;
  if (!opt.dict.empty()) {
    const SenseInventory inv = SenseInventory::load(opt.dict);
    for (const std::string& w : inv.words()) targets.push_back(w);
  }
  if (targets.empty())
    throw CLI::ValidationError("cws", "need --words and/or --dict to name target words");
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  const FunctionWordList f = function_words_from(opt.function_words);
  const std::vector<Sentence> corpus = load_corpus(opt.corpus);
  CwsTable table;
  for (const std::string& w : targets) {
    CooccurrenceSet cws = extract_cws(corpus, w, opt.cfg, f);
    if (!cws.members.empty()) table[w] = std::move(cws);
  }
  std::ostringstream text;
  write_cws(table, text);
  write_text(text.str(), opt.out);
  return 0;
}

int run_extract(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    std::string source, target, bitext, dict, function_words, out;
    AlignConfig align;
  } opt;
  app.add_option("--source", opt.source, "Source-language document");
  app.add_option("--target", opt.target, "Target-language document");
  app.add_option("--bitext", opt.bitext, "Pre-aligned bitext (`source<TAB>target` per line)");
  app.add_option("--dict", opt.dict, "Bilingual sense dictionary")->required();
  app.add_option("--function-words", opt.function_words, "Function word list");
  app.add_option("--min-anchors", opt.align.min_anchor_count,
                 "Dictionary anchors required per aligned pair");
  app.add_option("--max-length-ratio", opt.align.max_length_ratio,
                 "Maximum sentence length ratio");
  app.add_option("-o,--out", opt.out, "Output instance file")->required();
  parse(app);

  const bool raw = !opt.source.empty() || !opt.target.empty();
  if (raw == !opt.bitext.empty())
    throw CLI::ValidationError("extract", "need either --source/--target or --bitext");
  if (raw && (opt.source.empty() || opt.target.empty()))
    throw CLI::ValidationError("extract", "--source and --target go together");

  const SenseInventory inv = SenseInventory::load(opt.dict);
  const FunctionWordList f = function_words_from(opt.function_words);
  std::vector<BitextPair> pairs;
  if (raw) {
    pairs = align_sentences(load_corpus(opt.source), load_target_doc(opt.target), inv, opt.align);
  } else {
    pairs = load_prealigned_bitext(opt.bitext);
  }
  save_instances(extract_training(pairs, inv, f), opt.out);
  return 0;
}

int run_train(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    std::string instances, dict, taxonomy, cws, out;
    ModelFlags flags;
  } opt;
  app.add_option("--instances", opt.instances, "Tagged instance file")->required();
  app.add_option("--dict", opt.dict, "Bilingual sense dictionary")->required();
  app.add_option("--taxonomy", opt.taxonomy, "Is-a taxonomy file");
  app.add_option("--cws", opt.cws, "Co-occurrence word set file");
  add_model_flags(app, opt.flags);
  app.add_option("-o,--out", opt.out, "Output model file")->required();
  parse(app);

  const SenseInventory inv = SenseInventory::load(opt.dict);
  const Taxonomy tax = opt.taxonomy.empty() ? Taxonomy() : Taxonomy::load(opt.taxonomy);
  const CwsTable cws = opt.cws.empty() ? CwsTable() : load_cws(opt.cws);
  const std::vector<TaggedInstance> instances = load_instances(opt.instances);
  save_model(train_model(instances, inv, tax, cws, to_config(opt.flags)), opt.out);
  return 0;
}

int run_tag(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    std::string model, corpus, out;
    int abstain = 0;
  } opt;
  app.add_option("--model", opt.model, "Trained model file")->required();
  app.add_option("--corpus", opt.corpus, "Text to tag, one sentence per line")->required();
  add_abstain_flag(app, opt.abstain);
  app.add_option("-o,--out", opt.out, "Output file (default: stdout)");
  parse(app);

  const SenseModel model = load_model(opt.model);
  const DecisionPolicy policy = resolve_policy(opt.abstain, model.config().use_ess);
  std::ostringstream text;
  write_decisions(tag_file(model, opt.corpus, policy), text);
  write_text(text.str(), opt.out);
  return 0;
}

int run_eval(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    std::string model, instances, counts, out;
    int abstain = 0;
  } opt;
  app.add_option("--model", opt.model, "Trained model file");
  app.add_option("--instances", opt.instances, "Gold tagged instance file");
  app.add_option("--counts", opt.counts,
                 "Per-sense counts file (`word sense gold estimated correct`)");
  add_abstain_flag(app, opt.abstain);
  app.add_option("-o,--out", opt.out, "Output file (default: stdout)");
  parse(app);

  EvalReport report;
  if (!opt.counts.empty()) {
    if (!opt.model.empty() || !opt.instances.empty())
      throw CLI::ValidationError("eval", "--counts excludes --model/--instances");
    report = aggregate(load_sense_counts(opt.counts));
  } else {
    if (opt.model.empty() || opt.instances.empty())
      throw CLI::ValidationError("eval", "need --model and --instances, or --counts");
    const SenseModel model = load_model(opt.model);
    const DecisionPolicy policy = resolve_policy(opt.abstain, model.config().use_ess);
    const EvalOutcome outcome = evaluate_instances(model, load_instances(opt.instances), policy);
    report = aggregate(outcome.counts, outcome.abstained);
  }
  write_text(format_report(report), opt.out);
  return 0;
}

int run_experiment_cmd(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    std::string instances, dict, taxonomy, cws, out;
    ModelFlags flags;
    SplitSpec split;
  } opt;
  app.add_option("--instances", opt.instances, "Tagged instance file")->required();
  app.add_option("--dict", opt.dict, "Bilingual sense dictionary")->required();
  app.add_option("--taxonomy", opt.taxonomy, "Is-a taxonomy file");
  app.add_option("--cws", opt.cws, "Co-occurrence word set file");
  app.add_option("--train-fraction", opt.split.train_fraction,
                 "Train share of each (word, sense) stratum");
  app.add_option("--seed", opt.split.seed, "Split seed");
  add_model_flags(app, opt.flags);
  app.add_option("-o,--out", opt.out, "Output file (default: stdout)");
  parse(app);

  const SenseInventory inv = SenseInventory::load(opt.dict);
  const Taxonomy tax = opt.taxonomy.empty() ? Taxonomy() : Taxonomy::load(opt.taxonomy);
  const CwsTable cws = opt.cws.empty() ? CwsTable() : load_cws(opt.cws);
  const std::vector<TaggedInstance> instances = load_instances(opt.instances);

  ExperimentConfig cfg;
  cfg.base_config = to_config(opt.flags);
  const ExperimentResult result = run_experiment(instances, inv, tax, cws, cfg, opt.split);

  std::ostringstream text;
  char delta[32];
  std::snprintf(delta, sizeof(delta), "%.1f", result.recall_delta);
  text << "== without extended sense set ==\n"
       << format_report(result.baseline_report) << "== with extended sense set ==\n"
       << format_report(result.ess_report) << "recall_delta=" << delta << '\n';
  write_text(text.str(), opt.out);
  return 0;
}

int run_synth(CLI::App& app, const std::function<void(CLI::App&)>& parse) {
  struct {
    SynthSpec spec;
    std::string out_dir;
  } opt;
  app.add_option("--senses", opt.spec.senses, "Number of senses");
  app.add_option("--depth", opt.spec.chain_depth, "Hypernym chain depth per sense");
  app.add_option("--vocab-per-sense", opt.spec.vocab_per_sense, "Vocabulary pool per sense");
  app.add_option("--context-size", opt.spec.context_size, "Context words per instance");
  app.add_option("--sentences-per-sense", opt.spec.sentences_per_sense, "Instances per sense");
  app.add_option("--overlap", opt.spec.overlap, "Shared-vocabulary probability")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--sparsity", opt.spec.sparsity,
                 "Fraction of instances with one-off context words")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", opt.spec.seed, "Generation seed");
  app.add_option("--out-dir", opt.out_dir, "Directory for the fixture files")->required();
  parse(app);

  const SynthData data = generate_synthetic(opt.spec);
  const std::string dir = opt.out_dir + "/";
  save_inventory(data.inventory, dir + "dictionary.tsv");
  save_taxonomy(data.taxonomy, dir + "taxonomy.tsv");
  save_cws(data.cws, dir + "cws.tsv");
  save_instances(data.instances, dir + "instances.tsv");
  return 0;
}

using Handler = int (*)(CLI::App&, const std::function<void(CLI::App&)>&);

const std::map<std::string, std::pair<Handler, const char*>>& handlers() {
  static const std::map<std::string, std::pair<Handler, const char*>> table = {
      {"cws", {run_cws, "Extract co-occurrence word sets from a raw corpus"}},
      {"extract", {run_extract, "Extract sense-tagged training instances from bitext"}},
      {"train", {run_train, "Train a sense model from tagged instances"}},
      {"tag", {run_tag, "Tag every model word occurrence in a corpus"}},
      {"eval", {run_eval, "Score a model on gold instances, or a counts file"}},
      {"experiment",
       {run_experiment_cmd, "Split, train base-sense-only and extended models, compare on test"}},
      {"synth", {run_synth, "Generate a deterministic synthetic corpus fixture"}},
  };
  return table;
}

void print_usage(std::ostream& out) {
  out << "wsd - noun sense selection from sentence co-occurrence\n"
      << "usage: wsd <subcommand> [options]\n\n"
      << "subcommands:\n";
  for (const auto& [name, handler] : handlers())
    out << "  " << name << std::string(12 - name.size(), ' ') << handler.second << '\n';
  out << "\nrun `wsd <subcommand> --help` for the options of one subcommand.\n"
      << "every subcommand accepts --config FILE with one `key = value` per\n"
      << "line; command-line flags override config values.\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  if (argc <= 1) {
    print_usage(std::cerr);
    return 1;
  }
  const std::string command = argv[1];
  if (command == "-h" || command == "--help" || command == "help") {
    print_usage(std::cout);
    return 0;
  }
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    std::cerr << "unknown subcommand '" << command << "'\n\n";
    print_usage(std::cerr);
    return 1;
  }

  CLI::App app{it->second.second, "wsd " + command};
  app.set_config("--config", "", "Key = value defaults for this subcommand");

  int exit_code = 0;
  auto parse = [&](CLI::App& a) { a.parse(argc - 1, argv + 1); };
  try {
    exit_code = it->second.first(app, parse);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace wsd
