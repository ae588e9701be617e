// Copyright 2026 The punctseg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "punctseg/cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "punctseg/error.h"
#include "punctseg/file_util.h"
#include "punctseg/metrics.h"
#include "punctseg/reference_model.h"
#include "punctseg/run_config.h"
#include "punctseg/segmenter.h"
#include "punctseg/sepp.h"
#include "punctseg/textprep.h"

namespace punctseg {
namespace {

namespace fs = std::filesystem;

// Flags every pipeline command understands. Values stay strings until they
// are merged with the config file and validated in one place.
struct SharedFlags {
  std::optional<std::string> config;
  std::map<std::string, std::optional<std::string>> values;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config, "key = value config file");
    static const std::map<std::string, std::string> help = {
        {"window", "sliding window size in words (default 200)"},
        {"stride", "window stride (default 1)"},
        {"theta", "acceptance threshold on vote ratios (default 0.1)"},
        {"segmenters", "marks that end a segment, e.g. '.' or '.?' (default .?)"},
        {"pooling", "per-class or pooled (default per-class)"},
        {"chunk-token-budget", "upper bound on words per classifier call (default 512)"},
        {"classifier", "builtin:<model>, external:<cmd> or replay:<sepp>"},
        {"seed", "random seed (default 0)"},
        {"block-size", "sentences per test file (default 1000)"},
        {"threads", "worker threads for window classification (default 1)"},
        {"external-timeout", "seconds to wait for an external response (default 30)"},
        {"external-restarts", "respawns allowed for an external classifier (default 2)"},
        {"external-max-words", "words per external request (default 200)"},
    };
    for (const std::string& key : config_keys()) {
      cmd->add_option("--" + key, values[key], help.at(key));
    }
  }

  ConfigEntries entries() const {
    ConfigEntries merged;
    if (config) merged = read_config_file(*config);
    for (const auto& [key, value] : values) {
      if (value) merged[key] = *value;
    }
    return merged;
  }

  RunConfig resolve() const {
    RunConfig rc;
    apply_config(rc, entries());
    return rc;
  }
};

void require_readable(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
}

std::vector<std::string> read_stream(const std::string& path,
                                     const std::string& format) {
  if (format == "sepp") return strip_labels(read_sepp_file(path));
  if (format == "words") return read_word_stream(path);
  throw Error(ErrorCode::kUsage, "input format must be words or sepp");
}

void emit(const std::optional<std::string>& path, const std::string& data,
          std::ostream& out) {
  if (path) {
    write_file_atomic(*path, data);
  } else {
    out << data;
  }
}

// Index of the first word where two SEPP documents disagree, if any.
std::optional<std::size_t> first_word_mismatch(const SeppDocument& a,
                                               const SeppDocument& b) {
  const std::size_t n = std::min(a.tokens.size(), b.tokens.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.tokens[i].word != b.tokens[i].word) return i;
  }
  if (a.tokens.size() != b.tokens.size()) return n;
  return std::nullopt;
}

void require_aligned(const SeppDocument& gold, const SeppDocument& pred) {
  if (auto i = first_word_mismatch(gold, pred)) {
    const auto word = [](const SeppDocument& d, std::size_t k) {
      return k < d.tokens.size() ? "'" + d.tokens[k].word + "'" : std::string("<end>");
    };
    throw Error(ErrorCode::kWordMismatch,
                "word columns diverge at index " + std::to_string(*i) +
                    ": gold " + word(gold, *i) + ", predicted " + word(pred, *i));
  }
}

// ---------------------------------------------------------------------------

struct PrepareArgs {
  std::string input;
  std::string output;
  std::optional<std::string> truecaser;
  std::optional<std::string> save_truecaser;
};

void cmd_prepare(const PrepareArgs& a, std::ostream& out, std::ostream& err) {
  require_readable(a.input);
  if (a.truecaser) require_readable(*a.truecaser);

  std::vector<Sentence> sentences;
  std::size_t markup = 0;
  for (const std::string& line : split_lines(read_text_file(a.input))) {
    if (is_markup_line(line)) {
      ++markup;
      continue;
    }
    Sentence s = tokenize(line);
    if (!s.empty()) sentences.push_back(std::move(s));
  }
  if (sentences.empty()) {
    throw Error(ErrorCode::kTooFewUnits, "no sentences in " + a.input);
  }

  const TruecaseModel model =
      a.truecaser ? TruecaseModel::load(*a.truecaser) : train_truecaser(sentences);
  if (a.save_truecaser) model.save(*a.save_truecaser);
  for (Sentence& s : sentences) s = truecase(s, model);

  std::vector<ExtractWarning> warnings;
  const SeppDocument doc = extract_labels(sentences, PunctMapping::standard(), &warnings);
  for (const ExtractWarning& w : warnings) {
    err << "warning: sentence " << (w.sentence + 1) << ": " << w.message << "\n";
  }
  if (markup > 0) err << "note: dropped " << markup << " markup line(s)\n";
  write_file_atomic(a.output, write_sepp(doc));
  out << "sentences\t" << count_sentences(doc) << "\n"
      << "tokens\t" << doc.tokens.size() << "\n";
}

struct SplitArgs {
  std::vector<std::string> inputs;
  std::string train_out;
  std::string test_out;
  double fraction = 0.75;
  std::string unit = "document";
  std::uint64_t seed = 0;
};

void cmd_split(const SplitArgs& a, std::ostream& out) {
  for (const std::string& p : a.inputs) require_readable(p);
  SplitSpec spec;
  spec.train_fraction = a.fraction;
  spec.seed = a.seed;
  if (a.unit == "document") {
    spec.unit = SplitUnit::kDocument;
  } else if (a.unit == "sentence") {
    spec.unit = SplitUnit::kSentence;
  } else {
    throw Error(ErrorCode::kUsage, "unit must be document or sentence");
  }
  std::vector<SeppDocument> docs;
  for (const std::string& p : a.inputs) docs.push_back(read_sepp_file(p));
  const CorpusSplit split = split_corpus(docs, spec);
  write_file_atomic(a.train_out, write_sepp(concatenate(split.train)));
  write_file_atomic(a.test_out, write_sepp(concatenate(split.test)));
  out << "train_units\t" << split.train.size() << "\n"
      << "test_units\t" << split.test.size() << "\n";
}

struct TrainArgs {
  std::vector<std::string> inputs;
  std::string output;
  std::uint32_t epochs = 5;
  std::size_t train_window = 200;
  std::uint64_t seed = 0;
};

void cmd_train(const TrainArgs& a, std::ostream& out) {
  for (const std::string& p : a.inputs) require_readable(p);
  std::vector<SeppDocument> docs;
  for (const std::string& p : a.inputs) docs.push_back(read_sepp_file(p));
  TrainOptions options;
  options.epochs = a.epochs;
  options.seed = a.seed;
  options.window_words = a.train_window;
  const LinearModel model = train_reference(docs, options);
  save_model(model, a.output);
  out << "features\t" << model.weights().size() << "\n";
}

struct StreamArgs {
  std::string input;
  std::string format = "words";
  std::optional<std::string> output;
};

void cmd_classify(const StreamArgs& a, const SharedFlags& flags, std::ostream& out) {
  require_readable(a.input);
  const RunConfig rc = flags.resolve();
  const std::vector<std::string> words = read_stream(a.input, a.format);
  if (words.empty()) throw Error(ErrorCode::kEmptyStream, "no words in " + a.input);
  const auto classifier = make_classifier(rc);
  const std::size_t chunk = std::min({rc.segmenter.window_words,
                                      classifier->max_window_words(),
                                      rc.segmenter.chunk_token_budget});
  const std::vector<PunctLabel> labels = classify_in_chunks(*classifier, words, chunk);
  SeppDocument doc;
  for (std::size_t i = 0; i < words.size(); ++i) {
    LabeledToken t{words[i], false, labels[i]};
    t.eos = derived_eos(t);
    doc.tokens.push_back(std::move(t));
  }
  emit(a.output, write_sepp(doc), out);
}

void cmd_segment(const StreamArgs& a, const std::optional<std::string>& emit_sepp,
                 const SharedFlags& flags, std::ostream& out) {
  require_readable(a.input);
  const RunConfig rc = flags.resolve();
  const std::vector<std::string> words = read_stream(a.input, a.format);
  const auto classifier = make_classifier(rc);
  const SegmentedText text = segment(words, *classifier, rc.segmenter, rc.threads);
  if (emit_sepp) write_file_atomic(*emit_sepp, write_sepp(to_sepp(words, text.decision)));
  emit(a.output, format_segments(text), out);
}

struct EvalArgs {
  std::string gold;
  std::string pred;
  std::optional<std::string> tsv;
  std::optional<std::string> confusion_tsv;
  std::optional<std::string> output;
};

void cmd_eval_labels(const EvalArgs& a, std::ostream& out) {
  require_readable(a.gold);
  require_readable(a.pred);
  const SeppDocument gold = read_sepp_file(a.gold);
  const SeppDocument pred = read_sepp_file(a.pred);
  require_aligned(gold, pred);
  const ConfusionMatrix cm = confusion(labels_of(gold), labels_of(pred));
  const EvalReport r = report(cm);
  if (a.tsv) write_file_atomic(*a.tsv, format_report_tsv(r));
  if (a.confusion_tsv) write_file_atomic(*a.confusion_tsv, format_confusion_tsv(cm));
  emit(a.output, format_report_text(r), out);
}

void cmd_eval_boundaries(const EvalArgs& a, const SharedFlags& flags,
                         std::ostream& out) {
  require_readable(a.gold);
  require_readable(a.pred);
  const RunConfig rc = flags.resolve();
  const SeppDocument gold = read_sepp_file(a.gold);
  const SeppDocument pred = read_sepp_file(a.pred);
  require_aligned(gold, pred);
  const LabelSet s = rc.segmenter.segmenters;
  const BoundaryScore score =
      boundary_score(boundaries_of(labels_of(gold), s),
                     boundaries_of(labels_of(pred), s), gold.tokens.size());
  emit(a.output, format_boundary_tsv(score), out);
}

struct SweepArgs {
  std::string gold;
  std::vector<double> thetas;
  std::optional<std::string> output;
};

void cmd_sweep(const SweepArgs& a, const SharedFlags& flags, std::ostream& out) {
  if (a.thetas.empty()) throw Error(ErrorCode::kUsage, "--thetas needs at least one value");
  require_readable(a.gold);
  RunConfig rc = flags.resolve();
  const SeppDocument gold = read_sepp_file(a.gold);
  const std::vector<std::string> words = strip_labels(gold);
  const auto classifier = make_classifier(rc);
  // One classification pass; only the decision depends on theta.
  const VoteTable votes = accumulate_votes(words, *classifier, rc.segmenter, rc.threads);
  const std::vector<std::size_t> gold_b =
      boundaries_of(labels_of(gold), rc.segmenter.segmenters);

  std::string tsv = "theta\tprecision\trecall\tf1\ttp\tfp\tfn\tboundaries\n";
  for (double theta : a.thetas) {
    SegmenterConfig cfg = rc.segmenter;
    cfg.theta = theta;
    try {
      cfg.validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::kUsage, e.message());
    }
    const Decision d = decide(votes, cfg);
    const BoundaryScore s = boundary_score(gold_b, d.boundaries, words.size());
    tsv += format_double(theta, 4) + "\t" + format_double(s.precision) + "\t" +
           format_double(s.recall) + "\t" + format_double(s.f1) + "\t" +
           std::to_string(s.true_positives) + "\t" +
           std::to_string(s.false_positives) + "\t" +
           std::to_string(s.false_negatives) + "\t" +
           std::to_string(d.boundaries.size()) + "\n";
  }
  emit(a.output, tsv, out);
}

struct SignificanceArgs {
  std::string gold;
  std::string config_a;
  std::string config_b;
  std::uint64_t permutations = 10000;
  bool sample_stddev = false;
  std::optional<std::string> scores_out;
  std::optional<std::string> output;
};

// Everything that changes the vote tables; conditions that agree on it share
// one classification pass.
std::string vote_key(const RunConfig& rc) {
  return rc.classifier->to_string() + "|" + std::to_string(rc.segmenter.window_words) +
         "|" + std::to_string(rc.segmenter.stride) + "|" +
         std::to_string(rc.segmenter.chunk_token_budget) + "|" +
         std::to_string(rc.external_max_words);
}

void cmd_significance(const SignificanceArgs& a, const SharedFlags& flags,
                      std::ostream& out) {
  require_readable(a.gold);
  require_readable(a.config_a);
  require_readable(a.config_b);

  const ConfigEntries base = flags.entries();
  auto condition = [&](const std::string& path) {
    ConfigEntries e = base;
    for (const auto& [k, v] : read_config_file(path)) e[k] = v;
    RunConfig rc;
    apply_config(rc, e);
    if (!rc.classifier) throw Error(ErrorCode::kConfig, path + ": no classifier");
    return rc;
  };
  const RunConfig rc_a = condition(a.config_a);
  const RunConfig rc_b = condition(a.config_b);
  const RunConfig base_rc = flags.resolve();

  const SeppDocument corpus = read_sepp_file(a.gold);
  const std::vector<SeppDocument> files = split_testfiles(corpus, base_rc.block_size);
  if (files.size() < 2) {
    throw Error(ErrorCode::kTooShort, "need at least 2 test files, got " +
                                          std::to_string(files.size()));
  }

  std::map<std::string, std::vector<VoteTable>> vote_cache;
  auto scores_for = [&](const RunConfig& rc) {
    const std::string key = vote_key(rc);
    auto it = vote_cache.find(key);
    if (it == vote_cache.end()) {
      const auto classifier = make_classifier(rc);
      std::vector<VoteTable> tables;
      tables.reserve(files.size());
      for (const SeppDocument& f : files) {
        tables.push_back(accumulate_votes(strip_labels(f), *classifier,
                                          rc.segmenter, rc.threads));
      }
      it = vote_cache.emplace(key, std::move(tables)).first;
    }
    std::vector<double> scores;
    scores.reserve(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
      const Decision d = decide(it->second[i], rc.segmenter);
      const BoundaryScore s = boundary_score(
          boundaries_of(labels_of(files[i]), rc.segmenter.segmenters),
          d.boundaries, files[i].tokens.size());
      scores.push_back(s.f1);
    }
    return scores;
  };
  const std::vector<double> scores_a = scores_for(rc_a);
  const std::vector<double> scores_b = scores_for(rc_b);

  const StdDevKind kind = a.sample_stddev ? StdDevKind::kSample : StdDevKind::kPopulation;
  const DistributionSummary sum_a = summarize(scores_a, kind);
  const DistributionSummary sum_b = summarize(scores_b, kind);

  PermutationTestOptions opts;
  opts.seed = base_rc.seed;
  opts.permutations = a.permutations;
  // Sampling more patterns than exist is pointless; enumerate instead.
  opts.exhaustive = files.size() < 64 &&
                    (std::uint64_t{1} << files.size()) <= a.permutations;
  const double p = paired_significance(scores_a, scores_b, opts);

  if (a.scores_out) {
    std::string table = "file\tA\tB\n";
    for (std::size_t i = 0; i < files.size(); ++i) {
      table += std::to_string(i) + "\t" + format_double(scores_a[i]) + "\t" +
               format_double(scores_b[i]) + "\n";
    }
    write_file_atomic(*a.scores_out, table);
  }
  std::string result = format_summary_tsv({{"A", sum_a}, {"B", sum_b}});
  result += "\nci_ranks\t" + std::to_string(sum_a.ci_low_rank) + "\t" +
            std::to_string(sum_a.ci_high_rank) + "\n";
  result += "p_value\t" + format_double(p) + "\t" +
            (opts.exhaustive ? "exhaustive" : "sampled") + "\t" +
            (opts.exhaustive ? std::to_string(std::uint64_t{1} << files.size())
                             : std::to_string(a.permutations)) +
            "\n";
  emit(a.output, result, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Punctuation restoration and sentence segmentation toolkit", "punctseg"};
  app.require_subcommand(1);

  PrepareArgs prepare;
  auto* c_prepare = app.add_subcommand("prepare", "raw one-sentence-per-line text -> SEPP");
  c_prepare->add_option("input", prepare.input, "raw corpus")->required();
  c_prepare->add_option("-o,--output", prepare.output, "SEPP output")->required();
  c_prepare->add_option("--truecaser", prepare.truecaser, "apply this truecase model");
  c_prepare->add_option("--save-truecaser", prepare.save_truecaser,
                        "write the truecase model used");

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "seeded train/test split of SEPP files");
  c_split->add_option("inputs", split.inputs, "SEPP documents")->required();
  c_split->add_option("--train-out", split.train_out)->required();
  c_split->add_option("--test-out", split.test_out)->required();
  c_split->add_option("--fraction", split.fraction, "train fraction (default 0.75)");
  c_split->add_option("--unit", split.unit, "document or sentence");
  c_split->add_option("--seed", split.seed);

  TrainArgs train;
  auto* c_train = app.add_subcommand("train", "train the built-in reference classifier");
  c_train->add_option("inputs", train.inputs, "SEPP training documents")->required();
  c_train->add_option("-o,--output", train.output, "model file")->required();
  c_train->add_option("--epochs", train.epochs);
  c_train->add_option("--train-window", train.train_window);
  c_train->add_option("--seed", train.seed);

  StreamArgs classify_args;
  SharedFlags classify_flags;
  auto* c_classify = app.add_subcommand("classify", "one classifier pass, SEPP output");
  c_classify->add_option("input", classify_args.input)->required();
  c_classify->add_option("--input-format", classify_args.format, "words or sepp");
  c_classify->add_option("-o,--output", classify_args.output);
  classify_flags.attach(c_classify);

  StreamArgs segment_args;
  SharedFlags segment_flags;
  std::optional<std::string> emit_sepp;
  auto* c_segment = app.add_subcommand("segment", "sliding-window segmentation");
  c_segment->add_option("input", segment_args.input)->required();
  c_segment->add_option("--input-format", segment_args.format, "words or sepp");
  c_segment->add_option("-o,--output", segment_args.output);
  c_segment->add_option("--emit-sepp", emit_sepp, "also write predicted labels as SEPP");
  segment_flags.attach(c_segment);

  EvalArgs eval_labels;
  auto* c_eval_labels = app.add_subcommand("eval-labels", "per-class label evaluation");
  c_eval_labels->add_option("gold", eval_labels.gold)->required();
  c_eval_labels->add_option("pred", eval_labels.pred)->required();
  c_eval_labels->add_option("--tsv", eval_labels.tsv);
  c_eval_labels->add_option("--confusion", eval_labels.confusion_tsv);
  c_eval_labels->add_option("-o,--output", eval_labels.output);

  EvalArgs eval_bounds;
  SharedFlags eval_bounds_flags;
  auto* c_eval_bounds = app.add_subcommand("eval-boundaries", "boundary P/R/F1 for a segmenter set");
  c_eval_bounds->add_option("gold", eval_bounds.gold)->required();
  c_eval_bounds->add_option("pred", eval_bounds.pred)->required();
  c_eval_bounds->add_option("-o,--output", eval_bounds.output);
  eval_bounds_flags.attach(c_eval_bounds);

  SweepArgs sweep;
  SharedFlags sweep_flags;
  auto* c_sweep = app.add_subcommand("sweep", "boundary scores over a list of thetas");
  c_sweep->add_option("gold", sweep.gold)->required();
  c_sweep->add_option("--thetas", sweep.thetas, "comma-separated thresholds")
      ->delimiter(',');
  c_sweep->add_option("-o,--output", sweep.output);
  sweep_flags.attach(c_sweep);

  SignificanceArgs sig;
  SharedFlags sig_flags;
  auto* c_sig = app.add_subcommand(
      "significance", "compare two conditions over fixed-size test files");
  c_sig->add_option("gold", sig.gold)->required();
  c_sig->add_option("--config-a", sig.config_a, "condition A config file")->required();
  c_sig->add_option("--config-b", sig.config_b, "condition B config file")->required();
  c_sig->add_option("--permutations", sig.permutations);
  c_sig->add_flag("--sample-stddev", sig.sample_stddev, "n-1 denominator");
  c_sig->add_option("--scores-out", sig.scores_out, "per-file F1 table");
  c_sig->add_option("-o,--output", sig.output);
  sig_flags.attach(c_sig);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_prepare->parsed()) {
      cmd_prepare(prepare, out, err);
    } else if (c_split->parsed()) {
      cmd_split(split, out);
    } else if (c_train->parsed()) {
      cmd_train(train, out);
    } else if (c_classify->parsed()) {
      cmd_classify(classify_args, classify_flags, out);
    } else if (c_segment->parsed()) {
      cmd_segment(segment_args, emit_sepp, segment_flags, out);
    } else if (c_eval_labels->parsed()) {
      cmd_eval_labels(eval_labels, out);
    } else if (c_eval_bounds->parsed()) {
      cmd_eval_boundaries(eval_bounds, eval_bounds_flags, out);
    } else if (c_sweep->parsed()) {
      cmd_sweep(sweep, sweep_flags, out);
    } else if (c_sig->parsed()) {
      cmd_significance(sig, sig_flags, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kUsage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace punctseg
