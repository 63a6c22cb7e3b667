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

#ifndef FRAME_ORACLE_HPP
#define FRAME_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frame/aggregate.hpp"
#include "frame/model.hpp"

namespace frame {

/// Signed composite value at the time of largest magnitude.
struct CompositePeak {
  double t = 0.0;
  double v = 0.0;
};

/// Exact peak of the composite waveform for a fixed alignment. The composite
/// is piecewise linear with breakpoints at every shifted bump corner, so
/// evaluating |sum| at those times suffices. Ties resolve to the smallest
/// time.
inline CompositePeak composite_peak(std::span<const AttackerSpec> attackers,
                                    std::span<const double> shifts) {
  if (attackers.size() != shifts.size()) {
    raise(errc::length_mismatch,
          "need one shift per attacker, got " + std::to_string(shifts.size()) +
              " shifts for " + std::to_string(attackers.size()) +
              " attackers");
  }
  std::vector<double> breakpoints;
  breakpoints.reserve(attackers.size() * 3);
  for (std::size_t i = 0; i < attackers.size(); ++i) {
    breakpoints.push_back(shifts[i]);
    breakpoints.push_back(shifts[i] + attackers[i].peak());
    breakpoints.push_back(shifts[i] + attackers[i].end());
  }
  std::sort(breakpoints.begin(), breakpoints.end());

  CompositePeak best{breakpoints.empty() ? 0.0 : breakpoints.front(), 0.0};
  bool first = true;
  for (double t : breakpoints) {
    double v = 0.0;
    for (std::size_t i = 0; i < attackers.size(); ++i)
      v += eval_shifted(attackers[i], shifts[i], t);
    if (first || std::fabs(v) > std::fabs(best.v)) {
      best = {t, v};
      first = false;
    }
  }
  return best;
}

struct GridResult {
  double w = 0.0;                   // best composite magnitude found
  std::vector<double> shifts;       // one achieving alignment
  std::uint64_t combinations = 0;   // alignments evaluated
};

inline constexpr std::uint64_t kDefaultCombinationBudget = 10'000'000;

/// Exhaustive alignment search on a per-attacker shift grid
/// {a, a+step, ...} with the window end b always included. Enumeration is
/// lexicographic and keeps the first achiever of the best magnitude, so the
/// result is deterministic. Refuses grids above the combination budget.
inline GridResult grid_search(std::span<const AttackerSpec> attackers,
                              double step,
                              std::uint64_t budget = kDefaultCombinationBudget) {
  if (attackers.empty()) raise(errc::empty_input, "no attackers");
  if (!(step > 0.0)) {
    raise(errc::validation_error,
          "grid step must be positive, got " + std::to_string(step));
  }

  std::vector<std::vector<double>> grids;
  grids.reserve(attackers.size());
  std::uint64_t combos = 1;
  for (const AttackerSpec& att : attackers) {
    std::vector<double> grid;
    const double a = att.earliest();
    const double b = att.latest();
    for (double s = a; s < b - kTol; s += step) grid.push_back(s);
    grid.push_back(b);
    if (combos > budget / grid.size()) {
      raise(errc::combination_budget_exceeded,
            "alignment grid exceeds budget of " + std::to_string(budget) +
                " combinations");
    }
    combos *= grid.size();
    grids.push_back(std::move(grid));
  }

  GridResult result;
  result.combinations = combos;
  std::vector<std::size_t> cursor(attackers.size(), 0);
  std::vector<double> shifts(attackers.size());
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < attackers.size(); ++i)
      shifts[i] = grids[i][cursor[i]];
    const CompositePeak peak = composite_peak(attackers, shifts);
    if (first || std::fabs(peak.v) > result.w) {
      result.w = std::fabs(peak.v);
      result.shifts = shifts;
      first = false;
    }
    std::size_t i = attackers.size();
    while (i > 0) {
      --i;
      if (++cursor[i] < grids[i].size()) break;
      cursor[i] = 0;
      if (i == 0) return result;
    }
  }
}

/// Independent check of an analysis result: the reported alignment must
/// attain the reported magnitude exactly, and no alignment on the grid may
/// beat it.
struct VerificationReport {
  double frame_w = 0.0;
  double oracle_w = 0.0;
  double gap = 0.0;       // frame_w - oracle_w; >= -kTol when sound
  bool achieved = false;  // composite with S* attains frame_w
  double grid_step = 0.0;
  std::uint64_t combinations_evaluated = 0;

  bool sound() const { return gap >= -kTol; }
  bool passed() const { return achieved && sound(); }
};

inline VerificationReport verify(std::span<const AttackerSpec> attackers,
                                 const AnalysisResult& result, double step,
                                 std::uint64_t budget = kDefaultCombinationBudget) {
  VerificationReport report;
  report.frame_w = result.w_star;
  report.grid_step = step;

  const CompositePeak peak = composite_peak(attackers, result.s_star);
  report.achieved = nearly_equal(std::fabs(peak.v), result.w_star);

  const GridResult grid = grid_search(attackers, step, budget);
  report.oracle_w = grid.w;
  report.combinations_evaluated = grid.combinations;
  report.gap = report.frame_w - report.oracle_w;
  return report;
}

inline VerificationReport verify(const ChainCase& chain,
                                 const AnalysisResult& result, double step,
                                 std::uint64_t budget = kDefaultCombinationBudget) {
  return verify(std::span<const AttackerSpec>(chain.attackers), result, step,
                budget);
}

}  // namespace frame

#endif  // FRAME_ORACLE_HPP
