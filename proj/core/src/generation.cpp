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

#include "erag/generation.hpp"

#include <algorithm>
#include <thread>

#include "erag/text.hpp"

namespace erag {

double SimulatedFlops(std::uint64_t prompt_tokens, std::uint64_t output_tokens) {
  const double p = static_cast<double>(prompt_tokens);
  return static_cast<double>(output_tokens) * p * p;
}

std::size_t GenerationBackend::EstimatePromptTokens(
    const BackendRequest& request) const {
  return CountWhitespaceTokens(request.system) +
         CountWhitespaceTokens(request.prompt);
}

BackendRequest BuildBackendRequest(const PromptTemplate& prompt,
                                   const GenerationRequest& request) {
  BackendRequest out;
  out.query_id = request.query_id;
  out.doc_ids.reserve(request.documents.size());
  for (const auto& doc : request.documents) out.doc_ids.push_back(doc.doc_id);
  out.template_id = prompt.template_id;
  out.system = prompt.instruction_header;
  out.prompt = prompt.Render(request.query, request.documents);
  return out;
}

Generator::Generator(GenerationBackend& backend, ResponseCache* cache,
                     GenerationOptions options, Diagnostics* diagnostics)
    : backend_(backend),
      cache_(cache),
      options_(options),
      diagnostics_(diagnostics) {
  if (options_.max_parallel == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_parallel must be >= 1");
  }
}

GenerationResult Generator::Generate(const PromptTemplate& prompt,
                                     const GenerationRequest& request) {
  BackendRequest backend_request = BuildBackendRequest(prompt, request);
  const std::string backend_id = backend_.backend_id();
  std::string hash;
  if (cache_ != nullptr) {
    hash = ResponseCache::RequestHash(backend_id, prompt.template_id,
                                      request.query_id, request.query,
                                      backend_request.doc_ids);
    if (auto hit = cache_->Lookup(hash, diagnostics_)) {
      return {std::move(hit->text), hit->cost, true};
    }
  }
  BackendResponse response = backend_.Complete(backend_request);
  new_calls_.fetch_add(1);
  {
    std::lock_guard lock(cost_mu_);
    new_cost_ += response.cost;
  }
  if (cache_ != nullptr) {
    cache_->Store({hash, response.text, response.cost, backend_id,
                   prompt.template_id});
  }
  return {std::move(response.text), response.cost, false};
}

std::vector<GenerationOutcome> Generator::GenerateBatch(
    const PromptTemplate& prompt, std::span<const GenerationRequest> requests) {
  std::vector<GenerationOutcome> outcomes(requests.size());
  if (requests.empty()) return outcomes;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= requests.size()) return;
      GenerationOutcome& out = outcomes[i];
      if (stop.load()) {
        out.error_code = ErrorCode::kCancelled;
        out.error_message = "cancelled after an earlier failure";
        continue;
      }
      try {
        out.result = Generate(prompt, requests[i]);
      } catch (const Error& e) {
        out.error_code = e.code();
        out.error_message = e.what();
      } catch (const std::exception& e) {
        out.error_code = ErrorCode::kBackendUnavailable;
        out.error_message = e.what();
      }
      if (!out.ok() && options_.fail_fast) stop.store(true);
    }
  };

  const std::size_t workers = std::min(options_.max_parallel, requests.size());
  if (workers == 1) {
    worker();
    return outcomes;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();  // joins
  return outcomes;
}

CostRecord Generator::new_cost() const {
  std::lock_guard lock(cost_mu_);
  return new_cost_;
}

}  // namespace erag
