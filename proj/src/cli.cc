// Copyright 2026 The abbrev Authors.
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

#include "abbrev/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "abbrev/annotation.h"
#include "abbrev/config.h"
#include "abbrev/corpus.h"
#include "abbrev/error.h"
#include "abbrev/evaluation.h"
#include "abbrev/pipeline.h"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace abbrev {

namespace {

struct PipelineFlags {
  std::string config_file;
  std::optional<int> max_outer_words;
  std::optional<int> max_inner_chars;
  std::optional<int> max_outer_chars;
  std::optional<std::string> threshold;
  bool no_coref = false;
  std::string discard_rules;
  std::string prepositions;
  std::string dictionary;
  std::string propagate_types;
  int threads = 0;
};

void AddPipelineFlags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--config", f.config_file, "key = value parameter file");
  cmd->add_option("--max-outer-words", f.max_outer_words,
                  "maximum words in a long form (default 10)");
  cmd->add_option("--max-inner-chars", f.max_inner_chars,
                  "maximum characters inside brackets (default 40)");
  cmd->add_option("--max-outer-chars", f.max_outer_chars,
                  "tail-pattern character window (default 4 x words)");
  cmd->add_option("--threshold", f.threshold,
                  "minimum character-match score in (0, 1] (default 0.8)");
  cmd->add_flag("--no-coref", f.no_coref, "disable coreference");
  cmd->add_option("--discard-rules", f.discard_rules, "discard rules file");
  cmd->add_option("--prepositions", f.prepositions, "prepositions file");
  cmd->add_option("--dictionary", f.dictionary,
                  "abbreviation dictionary (SF<TAB>LF); enables lookup");
  cmd->add_option("--propagate-types", f.propagate_types,
                  "comma-separated annotation types copied from LF to SF");
  cmd->add_option("--threads", f.threads, "worker threads (0 = default)");
}

Resources BuildResources(const PipelineFlags& f) {
  KeyValues file_args;
  if (!f.config_file.empty()) file_args = ReadKeyValueFile(f.config_file);
  KeyValues cli_args;
  if (f.max_outer_words) {
    cli_args.emplace_back("maxOuterWords", std::to_string(*f.max_outer_words));
  }
  if (f.max_inner_chars) {
    cli_args.emplace_back("maxInnerChars", std::to_string(*f.max_inner_chars));
  }
  if (f.max_outer_chars) {
    cli_args.emplace_back("maxOuterChars", std::to_string(*f.max_outer_chars));
  }
  if (f.threshold) cli_args.emplace_back("threshold", *f.threshold);
  if (f.no_coref) cli_args.emplace_back("coreferenceEnabled", "false");
  if (!f.dictionary.empty()) cli_args.emplace_back("dictionaryEnabled", "true");

  Resources res;
  res.params = LoadParams(file_args, cli_args);
  if (!f.discard_rules.empty()) {
    res.rules = DiscardRuleSet::Load(f.discard_rules);
  }
  if (!f.prepositions.empty()) {
    res.prepositions = Lexicon::Load(f.prepositions, LexiconKind::kPrepositions);
  }
  if (!f.dictionary.empty()) {
    res.dictionary = Lexicon::Load(f.dictionary, LexiconKind::kDictionary);
  }
  std::stringstream types(f.propagate_types);
  for (std::string t; std::getline(types, t, ',');) {
    if (!t.empty()) res.propagation.propagatable_types.insert(t);
  }
#ifdef _OPENMP
  if (f.threads > 0) omp_set_num_threads(f.threads);
#endif
  return res;
}

std::vector<Document> ReadInputs(const std::vector<std::string>& inputs,
                                 std::istream& in) {
  std::vector<Document> docs;
  if (inputs.empty() || (inputs.size() == 1 && inputs[0] == "-")) {
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    docs.push_back(Document::FromUtf8("stdin", text));
    return docs;
  }
  for (const std::string& path : inputs) {
    for (Document& d : ReadDocuments(path)) docs.push_back(std::move(d));
  }
  return docs;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write output file: " + path);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int Annotate(const PipelineFlags& flags, const std::vector<std::string>& inputs,
             const std::string& format, const std::string& output_path,
             std::istream& in, std::ostream& out) {
  const Resources res = BuildResources(flags);
  std::vector<ProcessResult> results = ProcessCorpus(ReadInputs(inputs, in), res);
  Output output(output_path, out);
  for (const ProcessResult& r : results) {
    if (format == "inline") {
      output.stream() << ToInline(r.document) << "\n";
    } else {
      output.stream() << ToStandoffJson(r.document).dump() << "\n";
    }
  }
  return kExitOk;
}

int Evaluate(PipelineFlags flags, const std::vector<std::string>& inputs,
             const std::string& gold_path, const std::string& gold_format,
             const std::string& policy_name, bool table,
             const std::string& output_path, std::istream& in,
             std::ostream& out) {
  flags.no_coref = true;
  const Resources res = BuildResources(flags);
  const MatchPolicy policy = ParseMatchPolicy(policy_name);

  std::vector<Document> docs;
  std::vector<GoldPair> gold;
  if (gold_format == "biotext") {
    BiotextParse parsed = ParseBiotext(ReadFile(gold_path), "biotext");
    Document doc;
    doc.id = "biotext";
    doc.text = std::move(parsed.clean_text);
    docs.push_back(std::move(doc));
    gold = std::move(parsed.pairs);
  } else {
    gold = LoadGoldTsv(gold_path);
    docs = ReadInputs(inputs, in);
  }

  std::vector<GoldPair> predicted;
  for (const ProcessResult& r : ProcessCorpus(std::move(docs), res)) {
    for (GoldPair& p : PredictedPairs(r)) predicted.push_back(std::move(p));
  }
  const EvalReport report =
      ComputeMetrics(MatchPairsParallel(predicted, gold, policy));
  Output output(output_path, out);
  output.stream() << ToJson(report).dump() << "\n";
  if (table) output.stream() << FormatTable(report);
  return kExitOk;
}

int Validate(const std::vector<std::string>& inputs,
             const std::string& gold_path, std::istream& in,
             std::ostream& out) {
  std::vector<ParseIssue> issues;
  if (!gold_path.empty()) {
    issues = ValidateGold(LoadGoldTsv(gold_path), ReadInputs(inputs, in));
  } else {
    std::vector<std::string> sources = inputs;
    if (sources.empty()) sources.push_back("-");
    for (const std::string& path : sources) {
      std::string raw;
      if (path == "-") {
        raw.assign(std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>());
      } else {
        raw = ReadFile(path);
      }
      for (ParseIssue& i : ParseBiotext(raw).issues) {
        issues.push_back(std::move(i));
      }
    }
  }
  for (const ParseIssue& issue : issues) out << ToJson(issue).dump() << "\n";
  return issues.empty() ? kExitOk : kExitInputError;
}

}  // namespace

std::vector<Document> ParseJsonLines(const std::string& contents,
                                     const std::string& source_name) {
  std::vector<Document> docs;
  std::istringstream lines(contents);
  int line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + ": invalid JSON: " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("text") ||
        !obj["id"].is_string() || !obj["text"].is_string()) {
      throw InputError(where + ": expected string fields id and text");
    }
    Document doc = Document::FromUtf8(obj["id"].get<std::string>(),
                                      obj["text"].get<std::string>());
    if (obj.contains("annotations")) {
      for (const auto& a : obj["annotations"]) {
        try {
          Annotation ann;
          ann.span = {a.at("start").get<size_t>(), a.at("end").get<size_t>()};
          ann.type = a.at("type").get<std::string>();
          if (ann.span.start >= ann.span.end || ann.span.end > doc.size()) {
            throw InputError(where + ": annotation span out of bounds");
          }
          doc.annotations.push_back(std::move(ann));
        } catch (const nlohmann::json::exception& e) {
          throw InputError(where + ": bad annotation: " + e.what());
        }
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> ReadDocuments(const std::string& path) {
  const std::string contents = ReadFile(path);
  const std::filesystem::path p(path);
  if (p.extension() == ".jsonl") return ParseJsonLines(contents, path);
  std::vector<Document> docs;
  docs.push_back(Document::FromUtf8(p.filename().string(), contents));
  return docs;
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Abbreviation definition extraction, coreference and evaluation"};
  app.require_subcommand(1);

  PipelineFlags annotate_flags;
  std::vector<std::string> annotate_inputs;
  std::string format = "standoff";
  std::string annotate_output;
  CLI::App* annotate = app.add_subcommand("annotate", "annotate documents");
  AddPipelineFlags(annotate, annotate_flags);
  annotate->add_option("--format", format, "standoff or inline")
      ->check(CLI::IsMember({"standoff", "inline"}));
  annotate->add_option("--output", annotate_output, "output file");
  annotate->add_option("inputs", annotate_inputs,
                       "text or .jsonl files (default: stdin)");

  PipelineFlags eval_flags;
  std::vector<std::string> eval_inputs;
  std::string gold_path;
  std::string gold_format = "tsv";
  std::string policy = "text";
  std::string eval_output;
  bool table = false;
  CLI::App* eval = app.add_subcommand("eval", "score extraction against gold");
  AddPipelineFlags(eval, eval_flags);
  eval->add_option("--gold", gold_path, "gold file")->required();
  eval->add_option("--gold-format", gold_format, "tsv or biotext")
      ->check(CLI::IsMember({"tsv", "biotext"}));
  eval->add_option("--policy", policy, "text or span")
      ->check(CLI::IsMember({"text", "span"}));
  eval->add_flag("--table", table, "also print a plain-text table");
  eval->add_option("--output", eval_output, "output file");
  eval->add_option("inputs", eval_inputs, "documents");

  std::vector<std::string> validate_inputs;
  std::string validate_gold;
  CLI::App* validate =
      app.add_subcommand("validate", "report corpus markup problems");
  validate->add_option("--gold", validate_gold,
                       "gold TSV to check against the input documents");
  validate->add_option("inputs", validate_inputs,
                       "BioText-style files, or documents with --gold");

  std::vector<std::string> argv_storage = {"abbrev"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (annotate->parsed()) {
      return Annotate(annotate_flags, annotate_inputs, format, annotate_output,
                      in, out);
    }
    if (eval->parsed()) {
      return Evaluate(eval_flags, eval_inputs, gold_path, gold_format, policy,
                      table, eval_output, in, out);
    }
    return Validate(validate_inputs, validate_gold, in, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace abbrev
