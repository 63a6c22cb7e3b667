// Copyright 2026 The Frame Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAME_STATS_HPP
#define FRAME_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "frame/errors.hpp"

namespace frame {

namespace detail {

/// Midranks of the concatenation of two samples (1-based, ties averaged).
/// Also accumulates sum(t^3 - t) over tie groups for the variance correction.
inline std::vector<double> midranks(std::span<const double> a,
                                    std::span<const double> b,
                                    double& tie_sum) {
  const std::size_t n = a.size() + b.size();
  std::vector<std::size_t> order(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < a.size(); ++i) values[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) values[a.size() + i] = b[i];
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  std::vector<double> ranks(n);
  tie_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    const double t = static_cast<double>(j - i + 1);
    tie_sum += t * t * t - t;
    i = j + 1;
  }
  return ranks;
}

inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace detail

struct MannWhitneyResult {
  double u = 0.0;   // U statistic of the first sample
  double p = 1.0;   // two-sided p-value
  bool exact = false;
};

inline constexpr std::uint64_t kExactEnumerationBudget = 2'000'000;

/// Two-sided Mann-Whitney U test. Small samples (min size <= 8) use exact
/// enumeration of all rank assignments, which remains valid under ties; the
/// p-value is twice the smaller tail, capped at 1. Larger samples use the
/// normal approximation with tie correction and continuity correction.
inline MannWhitneyResult mann_whitney_u(std::span<const double> a,
                                        std::span<const double> b) {
  if (a.empty() || b.empty()) raise(errc::empty_sample, "empty sample");

  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  double tie_sum = 0.0;
  const std::vector<double> ranks = detail::midranks(a, b, tie_sum);

  double rank_sum_a = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) rank_sum_a += ranks[i];
  MannWhitneyResult result;
  result.u = rank_sum_a - n1 * (n1 + 1.0) / 2.0;

  const std::size_t n = a.size() + b.size();
  const std::size_t k = std::min(a.size(), b.size());
  std::uint64_t combinations = 0;
  if (k <= 8) {
    // C(n, k), saturating against the enumeration budget
    combinations = 1;
    for (std::size_t i = 0; i < k; ++i) {
      combinations = combinations * (n - i) / (i + 1);
      if (combinations > kExactEnumerationBudget) break;
    }
  }

  if (k > 0 && k <= 8 && combinations != 0 &&
      combinations <= kExactEnumerationBudget) {
    // Enumerate every way to assign |a| of the pooled ranks to the first
    // sample and compare the resulting U statistics against the observed one.
    std::vector<double> pooled(ranks);
    std::sort(pooled.begin(), pooled.end());
    const std::size_t pick = a.size();
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    const double offset = n1 * (n1 + 1.0) / 2.0;
    std::uint64_t total = 0;
    std::uint64_t at_most = 0;   // U <= observed
    std::uint64_t at_least = 0;  // U >= observed
    while (true) {
      double rank_sum = 0.0;
      for (std::size_t i : idx) rank_sum += pooled[i];
      const double u = rank_sum - offset;
      ++total;
      if (u <= result.u + 1e-9) ++at_most;
      if (u >= result.u - 1e-9) ++at_least;
      // next combination in lexicographic order
      std::size_t i = pick;
      while (i > 0) {
        --i;
        if (idx[i] != i + n - pick) {
          ++idx[i];
          for (std::size_t j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          const double lo = static_cast<double>(at_most) /
                            static_cast<double>(total);
          const double hi = static_cast<double>(at_least) /
                            static_cast<double>(total);
          result.p = std::min(1.0, 2.0 * std::min(lo, hi));
          result.exact = true;
          return result;
        }
      }
    }
  }

  const double mu = n1 * n2 / 2.0;
  const double nn = n1 + n2;
  double var = n1 * n2 / 12.0 * ((nn + 1.0) - tie_sum / (nn * (nn - 1.0)));
  if (var <= 0.0) {
    result.p = 1.0;  // all observations tied
    return result;
  }
  const double z = std::max(0.0, std::fabs(result.u - mu) - 0.5) /
                   std::sqrt(var);
  result.p = std::min(1.0, 2.0 * detail::normal_sf(z));
  return result;
}

/// Five-number summary with linear-interpolation quantiles at positions
/// q * (n - 1) (the common "type 7" rule).
struct BoxplotStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

inline BoxplotStats boxplot_stats(std::span<const double> samples) {
  if (samples.empty()) raise(errc::empty_sample, "empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    return sorted[lo] + (pos - static_cast<double>(lo)) *
                            (sorted[hi] - sorted[lo]);
  };
  return {sorted.front(), quantile(0.25), quantile(0.5), quantile(0.75),
          sorted.back()};
}

}  // namespace frame

#endif  // FRAME_STATS_HPP
