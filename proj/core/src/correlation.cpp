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

#include "erag/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "erag/error.hpp"

namespace erag {
namespace {

void CheckInputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sample vectors differ in length");
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "correlation needs at least 2 samples, got " +
                    std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite sample value");
    }
  }
}

std::uint64_t Pairs(std::uint64_t t) { return t * (t - 1) / 2; }

// Sum of t(t-1)/2 over runs of equal adjacent elements under `eq`.
template <typename It, typename Eq>
std::uint64_t TiedPairsSorted(It first, It last, Eq eq) {
  std::uint64_t total = 0;
  while (first != last) {
    It run = first;
    std::uint64_t t = 0;
    while (run != last && eq(*run, *first)) {
      ++run;
      ++t;
    }
    total += Pairs(t);
    first = run;
  }
  return total;
}

// Stable merge sort on y counting inversions (strict y order only).
std::uint64_t SortCountingSwaps(std::vector<double>& ys,
                                std::vector<double>& scratch, std::size_t lo,
                                std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t swaps = SortCountingSwaps(ys, scratch, lo, mid) +
                        SortCountingSwaps(ys, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (ys[j] < ys[i]) {
      swaps += mid - i;
      scratch[k++] = ys[j++];
    } else {
      scratch[k++] = ys[i++];
    }
  }
  while (i < mid) scratch[k++] = ys[i++];
  while (j < hi) scratch[k++] = ys[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            ys.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

double Pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    throw Error(ErrorCode::kUndefinedCorrelation,
                "correlation undefined for constant input");
  }
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

}  // namespace

std::uint64_t TiedPairs(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return TiedPairsSorted(sorted.begin(), sorted.end(),
                         [](double a, double b) { return a == b; });
}

double KendallTauB(std::span<const double> x, std::span<const double> y) {
  CheckInputs(x, y);
  const std::size_t n = x.size();
  std::vector<std::pair<double, double>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) pairs[i] = {x[i], y[i]};
  std::sort(pairs.begin(), pairs.end());

  const std::uint64_t n0 = Pairs(n);
  const std::uint64_t tx = TiedPairsSorted(
      pairs.begin(), pairs.end(),
      [](const auto& a, const auto& b) { return a.first == b.first; });
  const std::uint64_t txy =
      TiedPairsSorted(pairs.begin(), pairs.end(),
                      [](const auto& a, const auto& b) { return a == b; });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = pairs[i].second;
  std::vector<double> scratch(n);
  const std::uint64_t discordant = SortCountingSwaps(ys, scratch, 0, n);
  const std::uint64_t ty = TiedPairsSorted(
      ys.begin(), ys.end(), [](double a, double b) { return a == b; });

  if (tx == n0 || ty == n0) {
    throw Error(ErrorCode::kUndefinedCorrelation,
                "Kendall tau undefined: one variable is constant");
  }
  const std::uint64_t concordant = n0 - tx - ty + txy - discordant;
  const double numerator =
      static_cast<double>(concordant) - static_cast<double>(discordant);
  const double denominator = std::sqrt(static_cast<double>(n0 - tx) *
                                       static_cast<double>(n0 - ty));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 hold ranks i+1..j
    const double mean = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = mean;
    i = j;
  }
  return ranks;
}

double SpearmanRho(std::span<const double> x, std::span<const double> y) {
  CheckInputs(x, y);
  const auto rx = AverageRanks(x);
  const auto ry = AverageRanks(y);
  return Pearson(rx, ry);
}

CorrelationResult Correlate(std::span<const PairedSample> samples) {
  std::set<std::string> ids;
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(samples.size());
  y.reserve(samples.size());
  for (const auto& s : samples) {
    if (!ids.insert(s.query_id).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "duplicate sample for query '" + s.query_id + "'");
    }
    x.push_back(s.retrieval_score);
    y.push_back(s.downstream_score);
  }
  CorrelationResult result;
  result.n = samples.size();
  result.tau = KendallTauB(x, y);
  result.rho = SpearmanRho(x, y);
  result.tied_pairs_x = TiedPairs(x);
  result.tied_pairs_y = TiedPairs(y);
  return result;
}

CorrelationResult CorrelateRun(const std::map<std::string, double>& retrieval,
                               const std::map<std::string, E2EResult>& e2e) {
  std::vector<PairedSample> samples;
  for (const auto& [qid, score] : retrieval) {
    auto it = e2e.find(qid);
    if (it == e2e.end()) continue;
    samples.push_back({qid, score, it->second.downstream_score});
  }
  if (samples.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "only " + std::to_string(samples.size()) +
                    " queries shared between retrieval and downstream scores");
  }
  return Correlate(samples);
}

}  // namespace erag
