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

#ifndef ERAG_CORRELATION_HPP_
#define ERAG_CORRELATION_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "erag/e2e.hpp"

namespace erag {

struct PairedSample {
  std::string query_id;
  double retrieval_score = 0.0;
  double downstream_score = 0.0;
};

struct CorrelationResult {
  double tau = 0.0;  // Kendall tau-b
  double rho = 0.0;  // Spearman, average ranks
  std::size_t n = 0;
  std::uint64_t tied_pairs_x = 0;
  std::uint64_t tied_pairs_y = 0;
};

// Kendall tau-b in O(n log n) (Knight's merge-sort count). Throws
// kInsufficientData for n < 2 and kUndefinedCorrelation when either side is
// constant.
double KendallTauB(std::span<const double> x, std::span<const double> y);

// Pearson correlation of average ranks.
double SpearmanRho(std::span<const double> x, std::span<const double> y);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> AverageRanks(std::span<const double> values);

// Number of unordered pairs with equal values.
std::uint64_t TiedPairs(std::span<const double> values);

CorrelationResult Correlate(std::span<const PairedSample> samples);

// Joins on query id (queries present on only one side are dropped) and
// correlates retrieval scores against downstream scores.
CorrelationResult CorrelateRun(const std::map<std::string, double>& retrieval,
                               const std::map<std::string, E2EResult>& e2e);

}  // namespace erag

#endif  // ERAG_CORRELATION_HPP_
