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

#include "erag/downstream_metrics.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "erag/error.hpp"
#include "erag/text.hpp"

namespace erag {
namespace {

bool IsAsciiPunct(unsigned char c) { return c < 128 && std::ispunct(c); }

bool IsArticle(std::string_view token) {
  return token == "a" || token == "an" || token == "the";
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Removes article tokens while leaving all whitespace untouched.
std::string DropArticles(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    if (!IsArticle(token)) out.append(token);
  }
  return out;
}

double F1Against(const std::vector<std::string>& predicted,
                 const std::vector<std::string>& gold) {
  if (predicted.empty() && gold.empty()) return 1.0;
  if (predicted.empty() || gold.empty()) return 0.0;
  std::map<std::string_view, long> counts;
  for (const auto& t : gold) ++counts[t];
  long overlap = 0;
  for (const auto& t : predicted) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision =
      static_cast<double>(overlap) / static_cast<double>(predicted.size());
  const double recall =
      static_cast<double>(overlap) / static_cast<double>(gold.size());
  return 2.0 * precision * recall / (precision + recall);
}

void RequireGolds(std::span<const std::string> golds) {
  if (golds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "gold output list is empty");
  }
}

}  // namespace

std::string Normalize(std::string_view text, const NormalizationPolicy& policy) {
  std::string out(text);
  if (policy.lowercase) {
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return c < 128 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
  }
  if (policy.strip_punctuation) {
    for (auto& c : out) {
      if (IsAsciiPunct(static_cast<unsigned char>(c))) c = ' ';
    }
  }
  if (policy.strip_articles) out = DropArticles(out);
  if (policy.collapse_whitespace) {
    std::vector<std::string> tokens;
    for (auto token : SplitWhitespace(out)) tokens.emplace_back(token);
    out = Join(tokens, " ");
  }
  return out;
}

std::vector<std::string> NormalizedTokens(std::string_view text,
                                          const NormalizationPolicy& policy) {
  const std::string normalized = Normalize(text, policy);
  std::vector<std::string> tokens;
  for (auto token : SplitWhitespace(normalized)) tokens.emplace_back(token);
  return tokens;
}

double ExactMatch(std::string_view generated,
                  std::span<const std::string> golds,
                  const NormalizationPolicy& policy) {
  RequireGolds(golds);
  const std::string prediction = Normalize(generated, policy);
  for (const auto& gold : golds) {
    if (Normalize(gold, policy) == prediction) return 1.0;
  }
  return 0.0;
}

double Accuracy(std::string_view generated, std::span<const std::string> golds,
                std::span<const std::string> label_set,
                const NormalizationPolicy& policy) {
  RequireGolds(golds);
  const std::string prediction = Normalize(generated, policy);
  const bool in_label_set =
      std::any_of(label_set.begin(), label_set.end(), [&](const auto& label) {
        return Normalize(label, policy) == prediction;
      });
  if (!in_label_set) return 0.0;
  for (const auto& gold : golds) {
    if (Normalize(gold, policy) == prediction) return 1.0;
  }
  return 0.0;
}

double UnigramF1(std::string_view generated,
                 std::span<const std::string> golds,
                 const NormalizationPolicy& policy) {
  RequireGolds(golds);
  const auto predicted = NormalizedTokens(generated, policy);
  double best = 0.0;
  for (const auto& gold : golds) {
    best = std::max(best, F1Against(predicted, NormalizedTokens(gold, policy)));
  }
  return best;
}

std::string_view DownstreamMetricName(DownstreamMetricKind kind) {
  switch (kind) {
    case DownstreamMetricKind::kExactMatch: return "exact_match";
    case DownstreamMetricKind::kAccuracy: return "accuracy";
    case DownstreamMetricKind::kUnigramF1: return "unigram_f1";
  }
  return "exact_match";
}

DownstreamMetricKind ParseDownstreamMetric(std::string_view name) {
  if (name == "exact_match") return DownstreamMetricKind::kExactMatch;
  if (name == "accuracy") return DownstreamMetricKind::kAccuracy;
  if (name == "unigram_f1") return DownstreamMetricKind::kUnigramF1;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown downstream metric '" + std::string(name) + "'");
}

DownstreamMetric::DownstreamMetric(DownstreamMetricKind kind,
                                   NormalizationPolicy policy,
                                   std::vector<std::string> label_set)
    : kind_(kind), policy_(policy), label_set_(std::move(label_set)) {
  if (kind_ == DownstreamMetricKind::kAccuracy && label_set_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "accuracy requires a non-empty label set");
  }
}

double DownstreamMetric::Score(std::string_view generated,
                               std::span<const std::string> golds) const {
  switch (kind_) {
    case DownstreamMetricKind::kExactMatch:
      return ExactMatch(generated, golds, policy_);
    case DownstreamMetricKind::kAccuracy:
      return Accuracy(generated, golds, label_set_, policy_);
    case DownstreamMetricKind::kUnigramF1:
      return UnigramF1(generated, golds, policy_);
  }
  return 0.0;
}

}  // namespace erag
