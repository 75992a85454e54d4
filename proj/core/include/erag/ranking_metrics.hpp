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

#ifndef ERAG_RANKING_METRICS_HPP_
#define ERAG_RANKING_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace erag {

enum class AnnotationScheme { kErag, kContainment, kProvenance, kLlmJudge };

std::string_view SchemeName(AnnotationScheme scheme);
AnnotationScheme ParseScheme(std::string_view name);

enum class LabelKind { kBinary, kGraded };

std::string_view LabelKindName(LabelKind kind);
LabelKind ParseLabelKind(std::string_view name);

// Per-document relevance labels for one ranked list, in list order.
struct RelevanceVector {
  std::string query_id;
  std::vector<double> labels;
  AnnotationScheme scheme = AnnotationScheme::kErag;
  LabelKind label_kind = LabelKind::kBinary;
};

// Throws kInvalidArgument when labels leave [0,1], or when a binary vector
// holds anything other than 0 and 1.
void ValidateRelevanceVector(const RelevanceVector& v);

// Graded -> binary with label > threshold.
RelevanceVector Binarize(const RelevanceVector& v, double threshold);

// Evaluation depth: a positive count or the whole list.
class Cutoff {
 public:
  static Cutoff Full() { return Cutoff(); }
  static Cutoff At(std::size_t k);

  bool is_full() const { return !depth_.has_value(); }
  // Depth for a list of `length` entries; throws when it exceeds the list.
  std::size_t Resolve(std::size_t length) const;
  std::string ToString() const;

  friend bool operator==(const Cutoff&, const Cutoff&) = default;

 private:
  Cutoff() = default;
  std::optional<std::size_t> depth_;
};

enum class RankingMetricName {
  kPrecision,
  kRecall,
  kMap,
  kMrr,
  kNdcg,
  kHitRatio,
};

std::string_view RankingMetricNameString(RankingMetricName name);

struct RankingMetric {
  RankingMetricName name = RankingMetricName::kPrecision;
  Cutoff cutoff = Cutoff::Full();

  // Accepts "ndcg@10", "map", "precision@full".
  static RankingMetric Parse(std::string_view spec);
  // Canonical "<name>@<k|full>".
  std::string ToString() const;
  // Only precision and hit_ratio are defined over graded labels.
  bool SupportsGraded() const;

  friend bool operator==(const RankingMetric&, const RankingMetric&) = default;
};

// Comma-separated list of metric specs.
std::vector<RankingMetric> ParseMetricList(std::string_view specs);

// All metrics live in [0,1]. Binary-only metrics throw
// Error(kUnsupportedLabelKind) on graded vectors.
double Precision(const RelevanceVector& v, Cutoff cutoff);
double HitRatio(const RelevanceVector& v, Cutoff cutoff);
double Recall(const RelevanceVector& v, Cutoff cutoff);
double AveragePrecision(const RelevanceVector& v, Cutoff cutoff);
double ReciprocalRank(const RelevanceVector& v, Cutoff cutoff);
double Ndcg(const RelevanceVector& v, Cutoff cutoff);

double EvaluateMetric(const RelevanceVector& v, const RankingMetric& metric);

struct MetricCell {
  RankingMetric metric;
  std::optional<double> value;
  std::string skip_reason;  // set iff value is empty
};

// Applies each metric in order. Per-metric failures (graded input to a
// binary-only metric, cutoff beyond the list) become skipped cells.
std::vector<MetricCell> EvaluateList(const RelevanceVector& v,
                                     std::span<const RankingMetric> metrics);

}  // namespace erag

#endif  // ERAG_RANKING_METRICS_HPP_
