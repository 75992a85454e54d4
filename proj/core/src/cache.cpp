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

#include "erag/cache.hpp"

#include <chrono>
#include <ctime>
#include <mutex>

#include "erag/error.hpp"
#include "erag/hashing.hpp"
#include "erag/text.hpp"
#include "json.hpp"

namespace erag {
namespace {

using nlohmann::json;

constexpr char kFieldSep = '\x1f';

std::string UtcTimestamp() {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string ResponseCache::RequestHash(std::string_view backend_id,
                                       std::string_view template_id,
                                       std::string_view query_id,
                                       std::string_view query,
                                       std::span<const std::string> doc_ids) {
  std::string joined_ids;
  for (const auto& id : doc_ids) {
    joined_ids.append(id);
    joined_ids.push_back(kFieldSep);
  }
  std::string key;
  key.append(backend_id).push_back(kFieldSep);
  key.append(template_id).push_back(kFieldSep);
  key.append(Sha256Hex(std::string(query_id) + kFieldSep + std::string(query)))
      .push_back(kFieldSep);
  key.append(Sha256Hex(joined_ids));
  return Sha256Hex(key);
}

std::filesystem::path ResponseCache::PathFor(
    const std::string& request_hash) const {
  return dir_ / request_hash.substr(0, 2) / (request_hash + ".json");
}

std::optional<CachedResponse> ResponseCache::Lookup(
    const std::string& request_hash, Diagnostics* diagnostics) {
  if (dir_.empty()) {
    std::shared_lock lock(mu_);
    auto it = memory_.find(request_hash);
    if (it == memory_.end()) return std::nullopt;
    return it->second;
  }
  const auto path = PathFor(request_hash);
  std::string contents;
  {
    std::shared_lock lock(mu_);
    if (!std::filesystem::exists(path)) return std::nullopt;
    try {
      contents = ReadFile(path);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  try {
    const json record = json::parse(contents);
    CachedResponse response;
    response.request_hash = record.at("request_hash").get<std::string>();
    response.text = record.at("text").get<std::string>();
    const auto& cost = record.at("cost");
    response.cost.prompt_tokens = cost.at("prompt_tokens").get<std::uint64_t>();
    response.cost.output_tokens = cost.at("output_tokens").get<std::uint64_t>();
    response.cost.simulated_flops = cost.at("simulated_flops").get<double>();
    response.backend_id = record.at("backend_id").get<std::string>();
    response.template_id = record.at("template_id").get<std::string>();
    if (response.request_hash != request_hash) {
      throw std::invalid_argument("request hash mismatch");
    }
    return response;
  } catch (const std::exception& e) {
    if (diagnostics != nullptr) {
      diagnostics->Warn("discarding corrupt cache entry " + path.string() +
                        ": " + e.what());
    }
    std::unique_lock lock(mu_);
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
  }
}

void ResponseCache::Store(const CachedResponse& response) {
  std::unique_lock lock(mu_);
  if (dir_.empty()) {
    memory_[response.request_hash] = response;
    return;
  }
  json record = {
      {"request_hash", response.request_hash},
      {"text", response.text},
      {"cost",
       {{"prompt_tokens", response.cost.prompt_tokens},
        {"output_tokens", response.cost.output_tokens},
        {"simulated_flops", response.cost.simulated_flops}}},
      {"timestamp", UtcTimestamp()},
      {"backend_id", response.backend_id},
      {"template_id", response.template_id},
  };
  WriteFileAtomic(PathFor(response.request_hash), record.dump() + "\n");
}

}  // namespace erag
