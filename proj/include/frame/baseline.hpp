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

#ifndef FRAME_BASELINE_HPP
#define FRAME_BASELINE_HPP

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "frame/aggregate.hpp"
#include "frame/model.hpp"

namespace frame {

enum class BaselineMethod { naive_peak_sum, pruned_envelope };

/// Conventional estimate used to quantify pessimism reduction.
struct BaselineResult {
  BaselineMethod method = BaselineMethod::naive_peak_sum;
  double w = 0.0;             // estimated worst-case magnitude, >= 0
  std::vector<int> kept;      // surviving attacker indices (pruned method)
  SumRole direction = SumRole::maximum;  // polarity direction that produced w
};

/// Everything stacks: all attackers switch simultaneously in the same
/// direction, timing windows and polarity ignored.
inline BaselineResult naive_peak_sum(std::span<const AttackerSpec> attackers) {
  if (attackers.empty()) raise(errc::empty_input, "no attackers");
  BaselineResult result;
  result.method = BaselineMethod::naive_peak_sum;
  for (const AttackerSpec& att : attackers)
    result.w += std::fabs(att.magnitude());
  return result;
}

/// Polarity pruning: per direction, attackers of the opposing polarity are
/// dropped and the survivors are aligned by their outer envelopes, which is
/// exact for a single-polarity set. The reported direction is the one with
/// the larger peak (the maximum direction on ties). Restricting to one
/// direction reproduces a single invocation of such a tool.
inline BaselineResult pruned_envelope(
    std::span<const AttackerSpec> attackers,
    std::optional<SumRole> restrict_direction = std::nullopt) {
  if (attackers.empty()) raise(errc::empty_input, "no attackers");

  std::vector<Envelope> plus_outers;
  std::vector<Envelope> minus_outers;
  std::vector<int> plus_idx;
  std::vector<int> minus_idx;
  for (const AttackerSpec& att : attackers) {
    if (att.magnitude() >= 0.0) {
      plus_outers.push_back(build_outer(att));
      plus_idx.push_back(att.index);
    } else {
      minus_outers.push_back(build_outer(att));
      minus_idx.push_back(att.index);
    }
  }

  double w_max = 0.0;
  double w_min = 0.0;
  if (!plus_outers.empty())
    w_max = peak_magnitude(sum_envelopes(std::move(plus_outers),
                                         SumRole::maximum));
  if (!minus_outers.empty())
    w_min = peak_magnitude(sum_envelopes(std::move(minus_outers),
                                         SumRole::minimum));

  BaselineResult result;
  result.method = BaselineMethod::pruned_envelope;
  bool take_min = w_min > w_max;
  if (restrict_direction) take_min = *restrict_direction == SumRole::minimum;
  if (take_min) {
    result.w = w_min;
    result.kept = minus_idx;
    result.direction = SumRole::minimum;
  } else {
    result.w = w_max;
    result.kept = plus_idx;
    result.direction = SumRole::maximum;
  }
  return result;
}

/// Percentage by which the analyzed magnitude undercuts a baseline estimate.
inline double pessimism_reduction(double w_base, double w_frame) {
  if (!(w_base > 0.0)) {
    raise(errc::zero_baseline,
          "baseline magnitude must be positive, got " +
              std::to_string(w_base));
  }
  return 100.0 * (w_base - w_frame) / w_base;
}

}  // namespace frame

#endif  // FRAME_BASELINE_HPP
