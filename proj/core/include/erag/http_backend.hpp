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

#ifndef ERAG_HTTP_BACKEND_HPP_
#define ERAG_HTTP_BACKEND_HPP_

#include <atomic>
#include <chrono>
#include <optional>
#include <string>

#include "erag/backend.hpp"

namespace erag {

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_backoff{500};
  double backoff_multiplier = 2.0;

  // Delay before attempt `attempt` (2-based; the first attempt never waits).
  std::chrono::milliseconds BackoffBefore(int attempt) const;
};

struct HttpBackendConfig {
  // Base URL ("http://host:port") or full chat-completions URL.
  std::string endpoint;
  std::string model;
  std::string api_key;  // sent as a bearer token when non-empty
  double temperature = 0.0;
  int max_tokens = 64;
  RetryPolicy retry;
  std::chrono::seconds timeout{60};
  std::optional<std::size_t> context_limit;
};

// Client for the OpenAI-compatible POST /v1/chat/completions subset.
// Transport errors, 429 and 5xx are retried with exponential backoff; other
// non-2xx responses raise BackendRejected immediately.
class HttpBackend : public GenerationBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string backend_id() const override { return backend_id_; }
  BackendKind kind() const override {
    return BackendKind::kHttpOpenAiCompatible;
  }
  std::optional<std::size_t> context_limit() const override {
    return config_.context_limit;
  }

  // Total HTTP attempts including retries.
  std::uint64_t attempt_count() const { return attempts_.load(); }

  const std::string& host() const { return host_; }
  const std::string& path() const { return path_; }

 protected:
  BackendResponse DoComplete(const BackendRequest& request) override;

 private:
  HttpBackendConfig config_;
  std::string host_;  // scheme://host[:port]
  std::string path_;
  std::string backend_id_;
  std::atomic<std::uint64_t> attempts_{0};
};

}  // namespace erag

#endif  // ERAG_HTTP_BACKEND_HPP_
