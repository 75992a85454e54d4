// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// erag: staged retrieval evaluation for retrieval-augmented generation.
//
//   erag annotate  --config run.json   label every retrieved document
//   erag evaluate  --config run.json   aggregate labels with ranking metrics
//   erag e2e       --config run.json   score the generator on full lists
//   erag correlate --config run.json   correlate retrieval vs downstream
//   erag report    --config run.json   print the correlation table
//   erag run       --config run.json   all of the above in order

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "erag/config.hpp"
#include "erag/error.hpp"
#include "erag/pipeline.hpp"
#include "erag/ranking_metrics.hpp"
#include "erag/text.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::vector<std::string> schemes;
  std::string metrics;
  std::optional<std::size_t> depth;
  std::string backend_url;
  std::string model;
  std::optional<std::string> cache_dir;
  std::optional<std::string> out_dir;
  bool fail_fast = false;
  std::optional<double> binarize_threshold;
  bool quiet = false;
};

void AddCommonOptions(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Run configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--scheme", o.schemes,
                  "Annotation schemes: erag, containment, provenance, "
                  "llm_judge (comma separated or repeated)")
      ->delimiter(',');
  cmd->add_option("--metrics", o.metrics,
                  "Ranking metrics, e.g. ndcg@10,map,precision@full");
  cmd->add_option("--depth", o.depth, "Ranked-list depth k")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--backend-url", o.backend_url,
                  "OpenAI-compatible endpoint (switches to the HTTP backend)");
  cmd->add_option("--model", o.model, "Model name sent to the HTTP backend");
  cmd->add_option("--cache-dir", o.cache_dir, "Response cache directory");
  cmd->add_option("--out-dir", o.out_dir, "Output directory");
  cmd->add_flag("--fail-fast", o.fail_fast,
                "Stop issuing requests after the first generation failure");
  cmd->add_option("--binarize-threshold", o.binarize_threshold,
                  "Turn graded labels into binary (label > t) before "
                  "aggregation");
  cmd->add_flag("-q,--quiet", o.quiet, "Suppress warnings");
}

erag::RunConfig LoadConfig(const Overrides& o) {
  erag::RunConfig config = erag::RunConfig::Load(o.config_path);
  if (!o.schemes.empty()) {
    config.schemes.clear();
    for (const auto& s : o.schemes) config.schemes.push_back(erag::ParseScheme(s));
  }
  if (!o.metrics.empty()) config.metrics = erag::ParseMetricList(o.metrics);
  if (o.depth) config.depth = *o.depth;
  if (!o.backend_url.empty()) {
    config.backend.kind = "http";
    config.backend.endpoint = o.backend_url;
  }
  if (!o.model.empty()) config.backend.model = o.model;
  // Command-line locations are relative to the working directory.
  if (o.cache_dir) {
    config.cache_dir = std::filesystem::absolute(*o.cache_dir).string();
  }
  if (o.out_dir) {
    config.out_dir = std::filesystem::absolute(*o.out_dir).string();
  }
  if (o.fail_fast) config.fail_fast = true;
  if (o.binarize_threshold) config.binarize_threshold = o.binarize_threshold;
  return config;
}

void Print(const erag::PhaseSummary& s, bool quiet) {
  if (!quiet) {
    for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
  }
  std::cerr << s.phase << ": " << s.records_written << " written, "
            << s.records_reused << " reused, " << s.backend_calls
            << " backend calls, " << erag::FormatDouble(s.wall_seconds)
            << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retrieval evaluation for retrieval-augmented generation"};
  app.require_subcommand(1);

  Overrides o;
  std::vector<std::pair<std::string, CLI::App*>> commands;
  for (const char* name :
       {"annotate", "evaluate", "e2e", "correlate", "report", "run"}) {
    CLI::App* cmd = app.add_subcommand(name);
    AddCommonOptions(cmd, o);
    commands.emplace_back(name, cmd);
  }
  commands[0].second->description("Label retrieved documents per scheme");
  commands[1].second->description("Aggregate labels into retrieval scores");
  commands[2].second->description("Score the generator on full ranked lists");
  commands[3].second->description("Correlate retrieval and downstream scores");
  commands[4].second->description("Print the final report");
  commands[5].second->description("annotate, evaluate, e2e and correlate");

  CLI11_PARSE(app, argc, argv);

  try {
    erag::Pipeline pipeline(LoadConfig(o));
    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "annotate") {
      Print(pipeline.Annotate(), o.quiet);
    } else if (command == "evaluate") {
      Print(pipeline.Evaluate(), o.quiet);
    } else if (command == "e2e") {
      Print(pipeline.EndToEnd(), o.quiet);
    } else if (command == "correlate") {
      Print(pipeline.Correlate(), o.quiet);
    } else if (command == "report") {
      std::cout << pipeline.RenderSummary();
    } else {
      for (const auto& s : pipeline.RunAll()) Print(s, o.quiet);
      std::cout << pipeline.RenderSummary();
    }
  } catch (const erag::Error& e) {
    std::cerr << "erag: " << erag::ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "erag: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
