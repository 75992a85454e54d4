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

#ifndef ERAG_DOWNSTREAM_METRICS_HPP_
#define ERAG_DOWNSTREAM_METRICS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace erag {

// Answer normalization applied before comparing generated and gold text.
// Defaults follow the usual QA convention.
struct NormalizationPolicy {
  bool lowercase = true;
  bool strip_punctuation = true;  // ASCII punctuation becomes whitespace
  bool strip_articles = true;     // drops the tokens "a", "an", "the"
  bool collapse_whitespace = true;

  static NormalizationPolicy None() { return {false, false, false, false}; }
  friend bool operator==(const NormalizationPolicy&,
                         const NormalizationPolicy&) = default;
};

std::string Normalize(std::string_view text, const NormalizationPolicy& policy);

// Whitespace tokens of the normalized text.
std::vector<std::string> NormalizedTokens(std::string_view text,
                                          const NormalizationPolicy& policy);

double ExactMatch(std::string_view generated,
                  std::span<const std::string> golds,
                  const NormalizationPolicy& policy = {});

// 1 iff the normalized output equals a normalized gold that is also a member
// of the label set.
double Accuracy(std::string_view generated, std::span<const std::string> golds,
                std::span<const std::string> label_set,
                const NormalizationPolicy& policy = {});

// Max over golds of token-multiset F1. Both sides empty scores 1.
double UnigramF1(std::string_view generated,
                 std::span<const std::string> golds,
                 const NormalizationPolicy& policy = {});

enum class DownstreamMetricKind { kExactMatch, kAccuracy, kUnigramF1 };

std::string_view DownstreamMetricName(DownstreamMetricKind kind);
DownstreamMetricKind ParseDownstreamMetric(std::string_view name);

class DownstreamMetric {
 public:
  explicit DownstreamMetric(DownstreamMetricKind kind,
                            NormalizationPolicy policy = {},
                            std::vector<std::string> label_set = {});

  double Score(std::string_view generated,
               std::span<const std::string> golds) const;

  // exact_match and accuracy only ever produce 0 or 1.
  bool is_binary() const { return kind_ != DownstreamMetricKind::kUnigramF1; }
  DownstreamMetricKind kind() const { return kind_; }
  std::string_view name() const { return DownstreamMetricName(kind_); }
  const NormalizationPolicy& policy() const { return policy_; }
  const std::vector<std::string>& label_set() const { return label_set_; }

 private:
  DownstreamMetricKind kind_;
  NormalizationPolicy policy_;
  std::vector<std::string> label_set_;
};

}  // namespace erag

#endif  // ERAG_DOWNSTREAM_METRICS_HPP_
