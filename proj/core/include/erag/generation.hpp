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

#ifndef ERAG_GENERATION_HPP_
#define ERAG_GENERATION_HPP_

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "erag/backend.hpp"
#include "erag/cache.hpp"
#include "erag/diagnostics.hpp"
#include "erag/error.hpp"
#include "erag/prompt.hpp"
#include "erag/types.hpp"

namespace erag {

// One generation job: a query plus the documents to place in the prompt
// (empty for a closed-book probe).
struct GenerationRequest {
  std::string query_id;
  std::string query;
  std::vector<Document> documents;
};

struct GenerationResult {
  std::string text;
  CostRecord cost;  // cost of producing the text, even when cached
  bool from_cache = false;
};

// Positional batch result: either a result or an error.
struct GenerationOutcome {
  std::optional<GenerationResult> result;
  std::optional<ErrorCode> error_code;
  std::string error_message;

  bool ok() const { return result.has_value(); }
};

struct GenerationOptions {
  std::size_t max_parallel = 8;
  bool fail_fast = false;
};

BackendRequest BuildBackendRequest(const PromptTemplate& prompt,
                                   const GenerationRequest& request);

// Routes generation through the response cache and owns all request
// fan-out. The backend must outlive the generator.
class Generator {
 public:
  Generator(GenerationBackend& backend, ResponseCache* cache,
            GenerationOptions options = {}, Diagnostics* diagnostics = nullptr);

  // Throws on backend failure.
  GenerationResult Generate(const PromptTemplate& prompt,
                            const GenerationRequest& request);

  // Results come back in request order with at most max_parallel requests in
  // flight. Without fail_fast every request is attempted; with it, requests
  // not yet started after the first failure are reported as kCancelled.
  std::vector<GenerationOutcome> GenerateBatch(
      const PromptTemplate& prompt, std::span<const GenerationRequest> requests);

  GenerationBackend& backend() { return backend_; }
  const GenerationOptions& options() const { return options_; }

  // Backend calls issued by this generator and their summed cost; cache
  // hits contribute nothing.
  std::uint64_t new_calls() const { return new_calls_.load(); }
  CostRecord new_cost() const;

 private:
  GenerationBackend& backend_;
  ResponseCache* cache_;
  GenerationOptions options_;
  Diagnostics* diagnostics_;
  std::atomic<std::uint64_t> new_calls_{0};
  mutable std::mutex cost_mu_;
  CostRecord new_cost_;
};

}  // namespace erag

#endif  // ERAG_GENERATION_HPP_
