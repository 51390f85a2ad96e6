#include "lexcontrast/cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lexcontrast/contrast.h"
#include "lexcontrast/corpus.h"
#include "lexcontrast/error.h"
#include "lexcontrast/genquest.h"
#include "lexcontrast/seeds.h"
#include "lexcontrast/tasks.h"
#include "lexcontrast/text.h"
#include "lexcontrast/thesaurus.h"

namespace lexcontrast {

namespace {

// Destination for "-" (the caller's stream) or a file.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(OpenOutput(path));
      stream_ = file_.get();
    }
    path_ = path;
  }

  std::ostream &stream() { return *stream_; }

  void Close() {
    stream_->flush();
    if (!*stream_) throw IoError("failed writing '" + path_ + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_ = nullptr;
  std::string path_;
};

void RequireFile(const std::string &path, const std::string &what) {
  if (path.empty()) throw UsageError("missing --" + what);
  if (!std::filesystem::is_regular_file(path)) {
    throw IoError(what + " file '" + path + "' does not exist");
  }
}

void CheckOptionalFile(const std::string &path, const std::string &what) {
  if (!path.empty()) RequireFile(path, what);
}

// Every referenced input path is checked before any computation starts.
void ValidateConfig(const RunConfig &config, const std::string &command) {
  static const std::map<std::string, std::vector<std::string>> kRequired = {
      {"seeds", {"thesaurus"}},
      {"index", {"thesaurus"}},
      {"lexicon", {"thesaurus"}},
      {"classify", {"thesaurus", "pairs"}},
      {"solve", {"thesaurus", "questions"}},
      {"genq", {"opposites", "dt"}},
      {"genwc", {"thesaurus", "targets"}},
      {"stats", {}},
      {"count", {"corpus"}},
  };
  const std::map<std::string, const std::string *> paths = {
      {"thesaurus", &config.thesaurus}, {"pairs", &config.pairs},
      {"questions", &config.questions}, {"opposites", &config.opposites},
      {"dt", &config.dt},               {"targets", &config.targets},
      {"corpus", &config.corpus},       {"counts", &config.counts},
      {"adjacency-file", &config.adjacency_file},
  };
  for (const std::string &name : kRequired.at(command)) {
    RequireFile(*paths.at(name), name);
  }
  for (const auto &[name, path] : paths) CheckOptionalFile(*path, name);
  for (const std::string &path : config.seed_lists) {
    RequireFile(path, "seed-list");
  }
  for (const std::string &set : config.sets) {
    size_t eq = set.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--set expects name=path, got '" + set + "'");
    }
    RequireFile(set.substr(eq + 1), "set");
  }
  if (config.window < 1) throw UsageError("--window must be at least 1");
  if (config.trials < 1) throw UsageError("--trials must be at least 1");
  if (config.adjacency == "manual" && config.adjacency_file.empty()) {
    throw UsageError("--adjacency manual requires --adjacency-file");
  }
  if (command == "stats") {
    if (config.sets.empty()) throw UsageError("stats needs at least one --set");
    if (config.counts.empty() && config.corpus.empty()) {
      throw UsageError("stats needs --counts or --corpus");
    }
  }
}

AdjacencyMode MakeAdjacency(const RunConfig &config) {
  if (config.adjacency == "off") return AdjacencyMode::Off();
  if (config.adjacency == "heuristic") return AdjacencyMode::Heuristic();
  if (config.adjacency == "manual") {
    return AdjacencyMode::Manual(
        LoadAdjacencyAnnotations(config.adjacency_file));
  }
  throw UsageError("unknown adjacency mode '" + config.adjacency + "'");
}

std::vector<AffixPattern> SelectPatterns(const RunConfig &config) {
  const std::vector<AffixPattern> &all = BuiltinAffixPatterns();
  if (config.patterns.empty()) return all;
  std::vector<AffixPattern> selected;
  for (int id : config.patterns) {
    if (id < 1 || id > static_cast<int>(all.size())) {
      throw UsageError("affix pattern ids run from 1 to 15, got " +
                       std::to_string(id));
    }
    selected.push_back(all[id - 1]);
  }
  return selected;
}

std::vector<SeedPair> CollectSeeds(const RunConfig &config,
                                   const Thesaurus &thesaurus) {
  std::vector<std::vector<SeedPair>> lists;
  if (config.affix) {
    std::vector<AffixPattern> patterns = SelectPatterns(config);
    lists.push_back(GenerateAffixSeeds(thesaurus, patterns));
  }
  for (const std::string &path : config.seed_lists) {
    lists.push_back(LoadSeedList(path, &thesaurus));
  }
  return MergeSeeds(lists);
}

std::optional<CooccurrenceStore> LoadStore(const RunConfig &config) {
  if (!config.counts.empty()) return LoadCounts(config.counts);
  if (!config.corpus.empty()) {
    return CountCorpusFile(config.corpus, config.window);
  }
  return std::nullopt;
}

FallbackPolicy MakeFallback(const RunConfig &config) {
  FallbackPolicy policy;
  if (!ParseFallback(config.fallback, config.rng_seed, &policy)) {
    throw UsageError("unknown fallback '" + config.fallback + "'");
  }
  return policy;
}

std::vector<WordPair> LoadPairColumns(const std::string &path) {
  std::ifstream in = OpenInput(path);
  std::vector<WordPair> pairs;
  LineReader reader(in);
  std::string line;
  while (reader.Next(&line)) {
    if (IsCommentOrBlank(line)) continue;
    auto fields = Split(line, '\t');
    if (fields.size() < 2) {
      throw ParseError(path, reader.line_number(),
                       "expected word1<TAB>word2[<TAB>...]");
    }
    std::string a = NormalizeWord(fields[0]);
    std::string b = NormalizeWord(fields[1]);
    if (a.empty() || b.empty()) {
      throw ParseError(path, reader.line_number(), "empty word");
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

int CmdSeeds(const RunConfig &config, std::ostream &out) {
  Thesaurus thesaurus = LoadThesaurus(config.thesaurus);
  std::vector<SeedPair> seeds = CollectSeeds(config, thesaurus);
  Sink sink(config.output, out);
  WriteSeedList(seeds, sink.stream());
  sink.Close();
  return kExitOk;
}

int CmdIndex(const RunConfig &config, std::ostream &out) {
  AdjacencyMode adjacency = MakeAdjacency(config);
  Thesaurus thesaurus = LoadThesaurus(config.thesaurus);
  std::vector<SeedPair> seeds = CollectSeeds(config, thesaurus);
  ContrastIndex index = BuildContrastIndex(thesaurus, seeds, adjacency);
  Sink sink(config.output, out);
  WriteContrastIndex(index, sink.stream());
  sink.Close();
  return kExitOk;
}

int CmdLexicon(const RunConfig &config, std::ostream &out, std::ostream &err) {
  std::vector<ContrastTier> tiers;
  for (const std::string &name : config.tiers) {
    ContrastTier tier;
    if (!ParseTier(name, &tier)) {
      throw UsageError("unknown tier '" + name + "'");
    }
    if (tier != ContrastTier::kI && tier != ContrastTier::kII) {
      throw UsageError("lexicon tiers are limited to I and II");
    }
    tiers.push_back(tier);
  }
  if (tiers.empty()) throw UsageError("no lexicon tiers requested");
  AdjacencyMode adjacency = MakeAdjacency(config);
  Thesaurus thesaurus = LoadThesaurus(config.thesaurus);
  std::vector<SeedPair> seeds = CollectSeeds(config, thesaurus);
  ContrastIndex index = BuildContrastIndex(thesaurus, seeds, adjacency);
  Sink sink(config.output, out);
  size_t count = WriteLexicon(index, thesaurus, tiers, sink.stream());
  sink.Close();
  err << "wrote " << count << " pairs\n";
  return kExitOk;
}

int CmdClassify(const RunConfig &config, std::ostream &out) {
  FallbackPolicy fallback = MakeFallback(config);
  AdjacencyMode adjacency = MakeAdjacency(config);
  Thesaurus thesaurus = LoadThesaurus(config.thesaurus);
  std::vector<PairRelationItem> items = LoadPairItems(config.pairs);
  std::vector<SeedPair> seeds = CollectSeeds(config, thesaurus);
  ContrastIndex index = BuildContrastIndex(thesaurus, seeds, adjacency);
  std::vector<Relation> labels =
      ClassifyPairs(items, index, thesaurus, adjacency, fallback);

  Sink sink(config.output, out);
  for (size_t i = 0; i < items.size(); ++i) {
    const PairRelationItem &item = items[i];
    sink.stream() << item.word1 << '\t' << item.word2 << '\t'
                  << RelationName(item.gold) << '\t'
                  << RelationName(labels[i]) << '\t'
                  << FiringRule(index, thesaurus, item.word1, item.word2,
                                adjacency)
                  << '\n';
  }
  sink.Close();

  Sink metrics(config.metrics, out);
  metrics.stream() << "fallback\t" << fallback.Describe() << '\n';
  WriteEvalResult(EvaluatePairs(items, labels), metrics.stream());
  metrics.Close();
  return kExitOk;
}

int CmdSolve(const RunConfig &config, std::ostream &out) {
  if (config.baseline != "none" && config.baseline != "random" &&
      config.baseline != "seed-lookup") {
    throw UsageError("unknown baseline '" + config.baseline + "'");
  }
  AdjacencyMode adjacency = MakeAdjacency(config);
  Thesaurus thesaurus = LoadThesaurus(config.thesaurus);
  QuestionSet set = LoadQuestions(config.questions);
  std::optional<CooccurrenceStore> store = LoadStore(config);
  std::vector<SeedPair> seeds = CollectSeeds(config, thesaurus);
  ContrastIndex index = BuildContrastIndex(thesaurus, seeds, adjacency);
  ContrastSolver solver(thesaurus, index, store ? &*store : nullptr,
                        adjacency);
  std::vector<std::optional<int>> answers =
      SolveQuestions(solver, set.questions);

  Sink sink(config.output, out);
  for (size_t i = 0; i < set.questions.size(); ++i) {
    const ContrastQuestion &question = set.questions[i];
    sink.stream() << question.target << '\t' << question.answer_index << '\t';
    if (answers[i]) {
      const std::string &chosen = question.alternatives[*answers[i]];
      ContrastJudgment judgment = solver.Judge(question.target, chosen);
      sink.stream() << *answers[i] << '\t' << chosen << '\t'
                    << TierName(judgment.tier) << '\t'
                    << (judgment.pmi ? FormatDouble(*judgment.pmi) : "undefined");
    } else {
      sink.stream() << "-\t-\tnone\tundefined";
    }
    sink.stream() << '\n';
  }
  sink.Close();

  Sink metrics(config.metrics, out);
  metrics.stream() << "discarded_multiword\t" << set.discarded_multiword
                   << '\n';
  WriteEvalResult(EvaluateQuestions(set.questions, answers), metrics.stream());
  if (config.baseline == "random") {
    metrics.stream() << "random_baseline_accuracy\t"
                     << FormatDouble(RandomBaseline(set.questions,
                                                    config.trials,
                                                    config.rng_seed))
                     << '\n';
  } else if (config.baseline == "seed-lookup") {
    EvalResult lookup = SeedLookupBaseline(set.questions, seeds,
                                           config.fallback == "random",
                                           config.rng_seed);
    metrics.stream() << "seed_lookup_precision\t"
                     << FormatDouble(lookup.precision) << '\n'
                     << "seed_lookup_recall\t" << FormatDouble(lookup.recall)
                     << '\n'
                     << "seed_lookup_f_score\t"
                     << FormatDouble(lookup.f_score) << '\n';
  }
  metrics.Close();
  return kExitOk;
}

int CmdGenq(const RunConfig &config, std::ostream &out, std::ostream &err) {
  std::vector<SeedPair> opposites = LoadSeedList(config.opposites);
  DistributionalThesaurus dt = LoadDistributionalThesaurus(config.dt);
  std::vector<ContrastQuestion> questions =
      GenerateContrastQuestions(opposites, dt, config.rng_seed);
  Sink sink(config.output, out);
  WriteQuestions(questions, sink.stream());
  sink.Close();
  err << "generated " << questions.size() << " of " << opposites.size()
      << " questions\n";
  return kExitOk;
}

int CmdGenwc(const RunConfig &config, std::ostream &out) {
  GlossScope scope;
  if (config.gloss_scope == "paragraph") {
    scope = GlossScope::kParagraph;
  } else if (config.gloss_scope == "category") {
    scope = GlossScope::kCategory;
  } else {
    throw UsageError("unknown gloss scope '" + config.gloss_scope + "'");
  }
  Thesaurus thesaurus = LoadThesaurus(config.thesaurus);
  std::vector<WordPair> targets = LoadPairColumns(config.targets);
  std::vector<WordChoiceQuestion> questions =
      GenerateWordChoiceBatch(thesaurus, targets, scope, config.rng_seed);
  Sink sink(config.output, out);
  WriteWordChoiceQuestions(questions, sink.stream());
  sink.Close();
  return kExitOk;
}

int CmdStats(const RunConfig &config, std::ostream &out) {
  std::optional<CooccurrenceStore> store = LoadStore(config);
  std::vector<std::pair<std::string, std::vector<WordPair>>> sets;
  for (const std::string &entry : config.sets) {
    size_t eq = entry.find('=');
    sets.emplace_back(entry.substr(0, eq), LoadPairColumns(entry.substr(eq + 1)));
  }

  Sink sink(config.output, out);
  std::ostream &report = sink.stream();
  report << "set\tpairs\tdefined\tmean_pmi\tstddev_pmi\n";
  std::vector<std::vector<double>> values;
  for (const auto &[name, pairs] : sets) {
    values.push_back(DefinedPmis(*store, pairs));
    report << name << '\t' << pairs.size() << '\t' << values.back().size();
    if (values.back().empty()) {
      report << "\tn/a\tn/a\n";
      continue;
    }
    AssociationStats stats = ComputeAssociationStats(*store, pairs);
    report << '\t' << FormatDouble(stats.mean_pmi) << '\t'
           << FormatDouble(stats.stddev_pmi) << '\n';
  }
  if (sets.size() > 1) {
    report << "\nset_a\tset_b\tt\tdf\tp_value\n";
    for (size_t i = 0; i < sets.size(); ++i) {
      for (size_t j = i + 1; j < sets.size(); ++j) {
        report << sets[i].first << '\t' << sets[j].first;
        if (values[i].size() < 2 || values[j].size() < 2) {
          report << "\tn/a\tn/a\tn/a\n";
          continue;
        }
        TTestResult test = WelchTTest(values[i], values[j]);
        report << '\t' << FormatDouble(test.t) << '\t'
               << FormatDouble(test.degrees_of_freedom) << '\t'
               << FormatDouble(test.p_value, 9) << '\n';
      }
    }
  }
  sink.Close();
  return kExitOk;
}

int CmdCount(const RunConfig &config, std::ostream &out) {
  CooccurrenceStore store = CountCorpusFile(config.corpus, config.window);
  Sink sink(config.output, out);
  WriteCounts(store, sink.stream());
  sink.Close();
  return kExitOk;
}

void AddRunOptions(CLI::App &app, RunConfig &config) {
  app.add_option("--thesaurus", config.thesaurus, "Thesaurus file");
  app.add_option("--affix", config.affix, "Generate affix seeds (true/false)")
      ->capture_default_str();
  app.add_option("--patterns", config.patterns,
                 "Affix pattern ids to use (default: all)")
      ->delimiter(',');
  app.add_option("--seed-list", config.seed_lists, "External seed list(s)")
      ->delimiter(',');
  app.add_option("--adjacency", config.adjacency, "off | heuristic | manual")
      ->capture_default_str();
  app.add_option("--adjacency-file", config.adjacency_file,
                 "Manual adjacency annotations");
  app.add_option("--counts", config.counts, "Counts file");
  app.add_option("--corpus", config.corpus, "Sentence-per-line corpus");
  app.add_option("--window", config.window, "Co-occurrence window")
      ->capture_default_str();
  app.add_option("--rng-seed", config.rng_seed, "Random seed")
      ->capture_default_str();
  app.add_option("--fallback", config.fallback,
                 "refrain | random | predominant")
      ->capture_default_str();
  app.add_option("--output", config.output, "Output path ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--metrics", config.metrics, "Metrics path ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--questions", config.questions, "Contrast question file");
  app.add_option("--pairs", config.pairs, "Synonym/opposite pair file");
  app.add_option("--dt", config.dt, "Distributional thesaurus file");
  app.add_option("--opposites", config.opposites,
                 "Opposite pairs for question generation");
  app.add_option("--targets", config.targets, "Word-choice target pairs");
  app.add_option("--set", config.sets, "Pair set for stats, name=path");
  app.add_option("--tiers", config.tiers, "Lexicon tiers (I, II)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--gloss-scope", config.gloss_scope, "paragraph | category")
      ->capture_default_str();
  app.add_option("--baseline", config.baseline,
                 "none | random | seed-lookup (solve)")
      ->capture_default_str();
  app.add_option("--trials", config.trials, "Random baseline trials")
      ->capture_default_str();
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Lexical contrast toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  bool print_config = false;
  app.add_flag("--print-config", print_config,
               "Print the effective configuration and exit");

  RunConfig config;
  AddRunOptions(app, config);

  struct Command {
    const char *name;
    const char *help;
  };
  static constexpr Command kCommands[] = {
      {"seeds", "Generate affix seeds and merge external seed lists"},
      {"index", "Dump contrasting categories and prime paragraphs"},
      {"lexicon", "Write the Class I/II contrast lexicon"},
      {"classify", "Label word pairs as synonyms or opposites"},
      {"solve", "Solve most-contrasting-word questions"},
      {"genq", "Generate contrast questions from opposites"},
      {"genwc", "Generate word-choice questions"},
      {"stats", "PMI statistics and t-tests over pair sets"},
      {"count", "Count co-occurrences in a corpus"},
  };
  for (const Command &command : kCommands) app.add_subcommand(command.name, command.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    std::ostringstream message;
    int code = app.exit(e, message, message);
    if (code == 0) {
      out << message.str();
      return kExitOk;
    }
    err << message.str();
    return kExitUsage;
  }

  if (print_config) {
    out << app.config_to_str(true, false);
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    ValidateConfig(config, command);
    if (command == "seeds") return CmdSeeds(config, out);
    if (command == "index") return CmdIndex(config, out);
    if (command == "lexicon") return CmdLexicon(config, out, err);
    if (command == "classify") return CmdClassify(config, out);
    if (command == "solve") return CmdSolve(config, out);
    if (command == "genq") return CmdGenq(config, out, err);
    if (command == "genwc") return CmdGenwc(config, out);
    if (command == "stats") return CmdStats(config, out);
    if (command == "count") return CmdCount(config, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  err << "error: unknown command '" << command << "'\n";
  return kExitUsage;
}

}  // namespace lexcontrast
