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

#ifndef ERAG_CACHE_HPP_
#define ERAG_CACHE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>

#include "erag/backend.hpp"
#include "erag/diagnostics.hpp"

namespace erag {

struct CachedResponse {
  std::string request_hash;
  std::string text;
  CostRecord cost;
  std::string backend_id;
  std::string template_id;
};

// Content-addressed response store: one JSON record per response at
// <dir>/<hash[0:2]>/<hash>.json. Lookups may run concurrently; stores are
// serialized and written atomically. An empty directory keeps records in
// memory only.
class ResponseCache {
 public:
  explicit ResponseCache(std::filesystem::path dir = {});

  static std::string RequestHash(std::string_view backend_id,
                                 std::string_view template_id,
                                 std::string_view query_id,
                                 std::string_view query,
                                 std::span<const std::string> doc_ids);

  // Unreadable or mismatching records are deleted and reported as a miss.
  std::optional<CachedResponse> Lookup(const std::string& request_hash,
                                       Diagnostics* diagnostics = nullptr);
  void Store(const CachedResponse& response);

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path PathFor(const std::string& request_hash) const;

  std::filesystem::path dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, CachedResponse> memory_;
};

}  // namespace erag

#endif  // ERAG_CACHE_HPP_
