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

#ifndef ERAG_MOCK_BACKEND_HPP_
#define ERAG_MOCK_BACKEND_HPP_

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "erag/backend.hpp"

namespace erag {

// Lookup table driving the mock generator. Exact entries match a
// (query_id, document-id set) pair; any-of rules fire when at least one of
// their documents is in the request. Rules may be restricted to a template.
class MockOracle {
 public:
  struct AnyOfRule {
    std::string query_id;
    std::set<std::string> doc_ids;
    std::string answer;
    std::optional<std::string> template_id;
  };

  void AddExact(std::string query_id, std::set<std::string> doc_ids,
                std::string answer,
                std::optional<std::string> template_id = std::nullopt);
  void AddAnyOf(AnyOfRule rule);

  // Exact entries win over any-of rules; template-specific entries win over
  // generic ones.
  std::optional<std::string> Answer(const BackendRequest& request) const;

  // Digest of the table contents, used in the backend id.
  std::string Fingerprint() const;

  // JSONL: {"query_id", "doc_ids": [...], "answer", "match": "exact"|"any",
  // "template_id"?}; match defaults to exact.
  static MockOracle Load(const std::filesystem::path& path);
  static MockOracle Parse(std::string_view contents,
                          const std::string& source_name);

 private:
  using ExactKey = std::tuple<std::string, std::set<std::string>, std::string>;
  std::map<ExactKey, std::string> exact_;
  std::vector<AnyOfRule> any_of_;
};

// Deterministic text generator. Output depends only on the request's
// (query_id, document ids, template id); token counts are whitespace tokens
// of the rendered prompt and output.
class MockBackend : public GenerationBackend {
 public:
  using Rule = std::function<std::string(const BackendRequest&)>;

  struct Options {
    std::optional<std::size_t> context_limit;
    std::chrono::microseconds latency{0};
  };

  MockBackend(std::string backend_id, Rule rule);
  MockBackend(std::string backend_id, Rule rule, Options options);

  std::string backend_id() const override { return backend_id_; }
  BackendKind kind() const override { return BackendKind::kMock; }
  std::optional<std::size_t> context_limit() const override {
    return options_.context_limit;
  }
  std::size_t EstimatePromptTokens(const BackendRequest& request) const override;

  // Largest number of concurrently running requests observed.
  std::size_t max_in_flight() const { return max_in_flight_.load(); }

 protected:
  BackendResponse DoComplete(const BackendRequest& request) override;

 private:
  std::string backend_id_;
  Rule rule_;
  Options options_;
  std::atomic<std::size_t> in_flight_{0};
  std::atomic<std::size_t> max_in_flight_{0};
};

// Mock keyed on (query_id, doc-id set); unknown keys answer `fallback`.
std::unique_ptr<MockBackend> MockFromOracle(
    MockOracle oracle, std::string fallback = "unknown",
    MockBackend::Options options = {});
std::unique_ptr<MockBackend> MockFromOracle(
    const std::map<std::pair<std::string, std::set<std::string>>, std::string>&
        table,
    std::string fallback = "unknown", MockBackend::Options options = {});

}  // namespace erag

#endif  // ERAG_MOCK_BACKEND_HPP_
