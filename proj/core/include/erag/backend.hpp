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

#ifndef ERAG_BACKEND_HPP_
#define ERAG_BACKEND_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace erag {

// Token accounting for one generation. simulated_flops follows the quadratic
// attention model output_tokens * prompt_tokens^2 and is only filled in by
// backends that simulate cost.
struct CostRecord {
  std::uint64_t prompt_tokens = 0;
  std::uint64_t output_tokens = 0;
  double simulated_flops = 0.0;

  CostRecord& operator+=(const CostRecord& other) {
    prompt_tokens += other.prompt_tokens;
    output_tokens += other.output_tokens;
    simulated_flops += other.simulated_flops;
    return *this;
  }
  friend bool operator==(const CostRecord&, const CostRecord&) = default;
};

double SimulatedFlops(std::uint64_t prompt_tokens, std::uint64_t output_tokens);

// A fully rendered request. query_id and doc_ids ride along so that test
// doubles can key on them; HTTP backends only read system/prompt.
struct BackendRequest {
  std::string query_id;
  std::vector<std::string> doc_ids;
  std::string template_id;
  std::string system;
  std::string prompt;
};

struct BackendResponse {
  std::string text;
  CostRecord cost;
};

enum class BackendKind { kHttpOpenAiCompatible, kMock };

// The downstream generator: text in, text out. Implementations must be safe
// to call from several threads at once.
class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;

  // Stable identifier folded into cache keys; changes with the model.
  virtual std::string backend_id() const = 0;
  virtual BackendKind kind() const = 0;

  // Prompt budget in tokens, when the backend has one.
  virtual std::optional<std::size_t> context_limit() const {
    return std::nullopt;
  }

  // Token estimate used for context-limit checks before a request is sent.
  virtual std::size_t EstimatePromptTokens(const BackendRequest& request) const;

  BackendResponse Complete(const BackendRequest& request) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return DoComplete(request);
  }

  // Number of Complete() invocations, successful or not.
  std::uint64_t call_count() const {
    return calls_.load(std::memory_order_relaxed);
  }

 protected:
  virtual BackendResponse DoComplete(const BackendRequest& request) = 0;

 private:
  std::atomic<std::uint64_t> calls_{0};
};

}  // namespace erag

#endif  // ERAG_BACKEND_HPP_
