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

#include "erag/mock_backend.hpp"

#include <algorithm>
#include <thread>

#include "erag/error.hpp"
#include "erag/hashing.hpp"
#include "erag/text.hpp"
#include "json.hpp"

namespace erag {

void MockOracle::AddExact(std::string query_id, std::set<std::string> doc_ids,
                          std::string answer,
                          std::optional<std::string> template_id) {
  exact_[{std::move(query_id), std::move(doc_ids), template_id.value_or("")}] =
      std::move(answer);
}

void MockOracle::AddAnyOf(AnyOfRule rule) { any_of_.push_back(std::move(rule)); }

std::optional<std::string> MockOracle::Answer(
    const BackendRequest& request) const {
  const std::set<std::string> ids(request.doc_ids.begin(),
                                  request.doc_ids.end());
  for (const std::string& tmpl : {request.template_id, std::string()}) {
    auto it = exact_.find({request.query_id, ids, tmpl});
    if (it != exact_.end()) return it->second;
  }
  auto matches = [&](const AnyOfRule& rule, bool specific) {
    if (rule.query_id != request.query_id) return false;
    if (specific != rule.template_id.has_value()) return false;
    if (specific && *rule.template_id != request.template_id) return false;
    return std::any_of(ids.begin(), ids.end(),
                       [&](const auto& id) { return rule.doc_ids.count(id); });
  };
  for (bool specific : {true, false}) {
    for (const auto& rule : any_of_) {
      if (matches(rule, specific)) return rule.answer;
    }
  }
  return std::nullopt;
}

std::string MockOracle::Fingerprint() const {
  nlohmann::json dump = nlohmann::json::array();
  for (const auto& [key, answer] : exact_) {
    const auto& [qid, ids, tmpl] = key;
    dump.push_back({"exact", qid, ids, tmpl, answer});
  }
  for (const auto& rule : any_of_) {
    dump.push_back({"any", rule.query_id, rule.doc_ids,
                    rule.template_id.value_or(""), rule.answer});
  }
  return Sha256Hex(dump.dump());
}

MockOracle MockOracle::Parse(std::string_view contents,
                             const std::string& source_name) {
  MockOracle oracle;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    ++line_number;
    const std::string_view line = Trim(contents.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      std::set<std::string> ids;
      for (const auto& id : record.at("doc_ids")) ids.insert(id.get<std::string>());
      std::optional<std::string> tmpl;
      if (record.contains("template_id")) {
        tmpl = record["template_id"].get<std::string>();
      }
      const std::string match = record.value("match", std::string("exact"));
      if (match == "exact") {
        oracle.AddExact(record.at("query_id").get<std::string>(), std::move(ids),
                        record.at("answer").get<std::string>(), tmpl);
      } else if (match == "any") {
        oracle.AddAnyOf({record.at("query_id").get<std::string>(),
                         std::move(ids), record.at("answer").get<std::string>(),
                         tmpl});
      } else {
        throw ParseError(source_name, line_number,
                         "match must be 'exact' or 'any'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(source_name, line_number, e.what());
    }
  }
  return oracle;
}

MockOracle MockOracle::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path), path.string());
}

MockBackend::MockBackend(std::string backend_id, Rule rule)
    : MockBackend(std::move(backend_id), std::move(rule), Options{}) {}

MockBackend::MockBackend(std::string backend_id, Rule rule, Options options)
    : backend_id_(std::move(backend_id)),
      rule_(std::move(rule)),
      options_(options) {}

std::size_t MockBackend::EstimatePromptTokens(
    const BackendRequest& request) const {
  return CountWhitespaceTokens(request.prompt);
}

BackendResponse MockBackend::DoComplete(const BackendRequest& request) {
  const std::size_t now = in_flight_.fetch_add(1) + 1;
  std::size_t seen = max_in_flight_.load();
  while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
  }
  struct Release {
    std::atomic<std::size_t>& counter;
    ~Release() { counter.fetch_sub(1); }
  } release{in_flight_};

  if (options_.latency.count() > 0) std::this_thread::sleep_for(options_.latency);
  const std::size_t prompt_tokens = EstimatePromptTokens(request);
  if (options_.context_limit && prompt_tokens > *options_.context_limit) {
    throw Error(ErrorCode::kContextOverflow,
                "prompt of " + std::to_string(prompt_tokens) +
                    " tokens exceeds context limit " +
                    std::to_string(*options_.context_limit));
  }
  BackendResponse response;
  response.text = rule_(request);
  response.cost.prompt_tokens = prompt_tokens;
  response.cost.output_tokens = CountWhitespaceTokens(response.text);
  response.cost.simulated_flops =
      SimulatedFlops(response.cost.prompt_tokens, response.cost.output_tokens);
  return response;
}

std::unique_ptr<MockBackend> MockFromOracle(MockOracle oracle,
                                            std::string fallback,
                                            MockBackend::Options options) {
  const std::string id = "mock:" + oracle.Fingerprint().substr(0, 12) + ":" +
                         Sha256Hex(fallback).substr(0, 8);
  return std::make_unique<MockBackend>(
      id,
      [oracle = std::move(oracle),
       fallback = std::move(fallback)](const BackendRequest& request) {
        return oracle.Answer(request).value_or(fallback);
      },
      options);
}

std::unique_ptr<MockBackend> MockFromOracle(
    const std::map<std::pair<std::string, std::set<std::string>>, std::string>&
        table,
    std::string fallback, MockBackend::Options options) {
  MockOracle oracle;
  for (const auto& [key, answer] : table) {
    oracle.AddExact(key.first, key.second, answer);
  }
  return MockFromOracle(std::move(oracle), std::move(fallback), options);
}

}  // namespace erag
