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

#include "erag/http_backend.hpp"

#include <cmath>
#include <thread>

#include "erag/error.hpp"
#include "erag/hashing.hpp"
#include "erag/text.hpp"
#include "httplib.h"
#include "json.hpp"

namespace erag {
namespace {

using nlohmann::json;

constexpr std::string_view kChatPath = "/v1/chat/completions";

bool Retryable(int status) { return status == 429 || status >= 500; }

std::string ErrorMessageFromBody(const std::string& body) {
  try {
    const json parsed = json::parse(body);
    if (parsed.contains("error")) {
      const auto& err = parsed["error"];
      if (err.is_object() && err.contains("message")) {
        return err["message"].get<std::string>();
      }
      if (err.is_string()) return err.get<std::string>();
    }
  } catch (const json::exception&) {
  }
  return body.substr(0, 512);
}

}  // namespace

std::chrono::milliseconds RetryPolicy::BackoffBefore(int attempt) const {
  if (attempt <= 1) return std::chrono::milliseconds(0);
  const double scale = std::pow(backoff_multiplier, attempt - 2);
  return std::chrono::milliseconds(
      static_cast<long long>(static_cast<double>(base_backoff.count()) * scale));
}

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.retry.max_attempts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be >= 1");
  }
  const std::string& url = config_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "endpoint '" + url + "' lacks a scheme");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  host_ = url.substr(0, path_start);
  std::string path =
      path_start == std::string::npos ? std::string() : url.substr(path_start);
  while (!path.empty() && path.back() == '/') path.pop_back();
  if (path.empty()) {
    path_ = std::string(kChatPath);
  } else if (path.ends_with("/chat/completions")) {
    path_ = path;
  } else if (path.ends_with("/v1")) {
    path_ = path + "/chat/completions";
  } else {
    path_ = path + std::string(kChatPath);
  }
  backend_id_ = "http:" + config_.model + "@" +
                Sha256Hex(host_ + path_).substr(0, 12);
}

BackendResponse HttpBackend::DoComplete(const BackendRequest& request) {
  json body = {
      {"model", config_.model},
      {"messages", json::array()},
      {"temperature", config_.temperature},
      {"max_tokens", config_.max_tokens},
  };
  if (!request.system.empty()) {
    body["messages"].push_back({{"role", "system"}, {"content", request.system}});
  }
  body["messages"].push_back({{"role", "user"}, {"content", request.prompt}});
  const std::string payload = body.dump();

  httplib::Client client(host_);
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_write_timeout(config_.timeout);
  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }

  std::string last_failure;
  for (int attempt = 1; attempt <= config_.retry.max_attempts; ++attempt) {
    std::this_thread::sleep_for(config_.retry.BackoffBefore(attempt));
    attempts_.fetch_add(1);
    auto res = client.Post(path_, headers, payload, "application/json");
    if (!res) {
      last_failure = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (Retryable(res->status)) {
      last_failure = "HTTP " + std::to_string(res->status) + ": " +
                     ErrorMessageFromBody(res->body);
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw BackendRejected(res->status, "HTTP " + std::to_string(res->status) +
                                             ": " +
                                             ErrorMessageFromBody(res->body));
    }
    try {
      const json parsed = json::parse(res->body);
      BackendResponse response;
      const auto& content = parsed.at("choices").at(0).at("message").at("content");
      response.text = content.is_null() ? std::string() : content.get<std::string>();
      if (auto usage = parsed.find("usage");
          usage != parsed.end() && usage->is_object()) {
        response.cost.prompt_tokens = usage->value("prompt_tokens", 0ULL);
        response.cost.output_tokens = usage->value("completion_tokens", 0ULL);
      } else {
        response.cost.prompt_tokens = EstimatePromptTokens(request);
        response.cost.output_tokens = CountWhitespaceTokens(response.text);
      }
      return response;
    } catch (const json::exception& e) {
      throw BackendRejected(res->status,
                            std::string("malformed completion response: ") +
                                e.what());
    }
  }
  throw Error(ErrorCode::kBackendUnavailable,
              "backend unavailable after " +
                  std::to_string(config_.retry.max_attempts) +
                  " attempts; last failure: " + last_failure);
}

}  // namespace erag
