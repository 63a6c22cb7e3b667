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

#ifndef FRAME_AGGREGATE_HPP
#define FRAME_AGGREGATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "frame/envelope.hpp"
#include "frame/model.hpp"

namespace frame {

/// Per-attacker entry of a master vertex: the attacker's envelope voltage at
/// the master time plus the one-sided limits of its achieving shift.
struct AttributeTuple {
  double v = 0.0;
  double shift_left = 0.0;
  double shift_right = 0.0;
};

struct MasterVertex {
  double t = 0.0;
  double v = 0.0;  // sum of the attribute-tuple voltages
};

enum class SumRole { maximum, minimum };

inline const char* sum_role_name(SumRole r) {
  return r == SumRole::maximum ? "max" : "min";
}

/// Sum of several envelopes on a merged master vertex list.
///
/// The master list holds every distinct vertex time of every component
/// envelope (coalesced at tolerance kTol, strictly increasing). For each
/// component with no native vertex at a master time, its tuple is filled by
/// linear interpolation between its own bracketing vertices, with constant
/// extension outside its support. Between consecutive master times every
/// component is linear, so the summed trace interpolates exactly.
struct SummedEnvelope {
  SumRole role = SumRole::maximum;
  std::vector<Envelope> components;   // chain order, one per attacker
  std::vector<MasterVertex> master;   // strictly increasing times
  std::vector<AttributeTuple> tuples; // flat [component][master vertex]

  std::size_t vertex_count() const { return master.size(); }

  const AttributeTuple& tuple_at(std::size_t component,
                                 std::size_t vertex) const {
    return tuples[component * master.size() + vertex];
  }

  /// Summed voltage at time t; zero outside the master span.
  double value_at(double t) const {
    if (master.size() < 2 || t <= master.front().t || t >= master.back().t)
      return 0.0;
    auto it = std::lower_bound(
        master.begin(), master.end(), t,
        [](const MasterVertex& mv, double x) { return mv.t < x; });
    const auto hi = static_cast<std::size_t>(it - master.begin());
    if (nearly_equal(master[hi].t, t)) return master[hi].v;
    const auto lo = hi - 1;
    const double dt = master[hi].t - master[lo].t;
    const double w = dt <= kTol ? 1.0 : (t - master[lo].t) / dt;
    return master[lo].v + w * (master[hi].v - master[lo].v);
  }

  /// Achieving shift (right limit) of every component at time t.
  std::vector<double> alignment_at(double t) const {
    std::vector<double> shifts;
    shifts.reserve(components.size());
    for (const Envelope& env : components)
      shifts.push_back(shift_at(env, t).right);
    return shifts;
  }
};

/// Splits attacker positions by bump polarity: magnitudes >= 0 go to the
/// first set, negative ones to the second. Returned values are the
/// attackers' 1-based indices.
inline std::pair<std::vector<int>, std::vector<int>> partition(
    std::span<const AttackerSpec> attackers) {
  std::vector<int> plus;
  std::vector<int> minus;
  for (const AttackerSpec& att : attackers) {
    (att.magnitude() >= 0.0 ? plus : minus).push_back(att.index);
  }
  return {std::move(plus), std::move(minus)};
}

/// Adds envelopes on a merged master vertex list. O(n^2) for n envelopes of
/// bounded vertex count: one sort of all vertices, then a linear fill of the
/// n tuple chains across the master list.
inline SummedEnvelope sum_envelopes(std::vector<Envelope> envelopes,
                                    SumRole role = SumRole::maximum) {
  if (envelopes.empty()) raise(errc::empty_input, "no envelopes to sum");

  struct Record {
    double t;
    std::size_t component;
    std::size_t vertex;
  };
  std::vector<Record> records;
  std::size_t total = 0;
  for (const Envelope& env : envelopes) total += env.vertices.size();
  records.reserve(total);
  for (std::size_t c = 0; c < envelopes.size(); ++c) {
    for (std::size_t k = 0; k < envelopes[c].vertices.size(); ++k) {
      records.push_back({envelopes[c].vertices[k].t, c, k});
    }
  }
  std::sort(records.begin(), records.end(),
            [](const Record& x, const Record& y) {
              if (x.t != y.t) return x.t < y.t;
              if (x.component != y.component) return x.component < y.component;
              return x.vertex < y.vertex;
            });

  SummedEnvelope sum;
  sum.role = role;
  sum.components = std::move(envelopes);

  // Coalesce vertex times into master vertices and remember which master
  // slot each component vertex landed in.
  std::vector<std::size_t> group_of(records.size());
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (sum.master.empty() || records[r].t > sum.master.back().t + kTol) {
      sum.master.push_back({records[r].t, 0.0});
    }
    group_of[r] = sum.master.size() - 1;
  }

  const std::size_t n_master = sum.master.size();
  const std::size_t n_comp = sum.components.size();
  sum.tuples.assign(n_comp * n_master, AttributeTuple{});

  // Native tuples: a component may contribute several coincident vertices to
  // one master slot (zero-width plateau); keep the leftmost left limit and
  // rightmost right limit.
  struct Native {
    std::size_t master_idx;
    AttributeTuple tuple;
  };
  std::vector<std::vector<Native>> natives(n_comp);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const Record& rec = records[r];
    const Vertex& vx = sum.components[rec.component].vertices[rec.vertex];
    auto& list = natives[rec.component];
    if (!list.empty() && list.back().master_idx == group_of[r]) {
      list.back().tuple.v = vx.v;
      list.back().tuple.shift_right = vx.shift_right;
    } else {
      list.push_back({group_of[r], {vx.v, vx.shift_left, vx.shift_right}});
    }
  }

  for (std::size_t c = 0; c < n_comp; ++c) {
    AttributeTuple* row = sum.tuples.data() + c * n_master;
    const auto& nat = natives[c];
    std::size_t k = 0;  // index of the first native at or after cursor
    for (std::size_t j = 0; j < n_master; ++j) {
      while (k < nat.size() && nat[k].master_idx < j) ++k;
      AttributeTuple tuple;
      if (k < nat.size() && nat[k].master_idx == j) {
        tuple = nat[k].tuple;
      } else if (k == 0) {
        // before the component's first vertex: zero trace, constant shift
        tuple = {0.0, nat.front().tuple.shift_left,
                 nat.front().tuple.shift_left};
      } else if (k == nat.size()) {
        tuple = {0.0, nat.back().tuple.shift_right,
                 nat.back().tuple.shift_right};
      } else {
        const Native& lo = nat[k - 1];
        const Native& hi = nat[k];
        const double t0 = sum.master[lo.master_idx].t;
        const double t1 = sum.master[hi.master_idx].t;
        const double dt = t1 - t0;
        const double w = dt <= kTol ? 1.0 : (sum.master[j].t - t0) / dt;
        const double v = lo.tuple.v + w * (hi.tuple.v - lo.tuple.v);
        const double s = lo.tuple.shift_right +
                         w * (hi.tuple.shift_left - lo.tuple.shift_right);
        tuple = {v, s, s};
      }
      row[j] = tuple;
      sum.master[j].v += tuple.v;
    }
  }
  return sum;
}

/// Envelope of the composite maximum: positive outer plus negative inner.
inline SummedEnvelope build_emax(std::span<const AttackerSpec> attackers) {
  if (attackers.empty()) raise(errc::empty_input, "no attackers");
  std::vector<Envelope> envs;
  envs.reserve(attackers.size());
  for (const AttackerSpec& att : attackers) {
    envs.push_back(att.magnitude() >= 0.0 ? build_outer(att)
                                          : build_inner(att));
  }
  return sum_envelopes(std::move(envs), SumRole::maximum);
}

/// Envelope of the composite minimum: positive inner plus negative outer.
inline SummedEnvelope build_emin(std::span<const AttackerSpec> attackers) {
  if (attackers.empty()) raise(errc::empty_input, "no attackers");
  std::vector<Envelope> envs;
  envs.reserve(attackers.size());
  for (const AttackerSpec& att : attackers) {
    envs.push_back(att.magnitude() >= 0.0 ? build_inner(att)
                                          : build_outer(att));
  }
  return sum_envelopes(std::move(envs), SumRole::minimum);
}

/// Largest absolute summed voltage over the master vertices. Extrema of a
/// piecewise-linear trace occur at vertices, so the scan is exact.
inline double peak_magnitude(const SummedEnvelope& sum) {
  double peak = 0.0;
  for (const MasterVertex& mv : sum.master)
    peak = std::max(peak, std::fabs(mv.v));
  return peak;
}

/// Result of a worst-case analysis.
struct AnalysisResult {
  double w_star = 0.0;              // worst-case composite magnitude
  double t_star = 0.0;              // canonical worst-case time (smallest)
  std::vector<double> t_star_all;   // all vertex times attaining w_star
  std::vector<double> s_star;       // achieving shift per attacker at t_star
  SumRole achieved_on = SumRole::maximum;
  SummedEnvelope e_max;
  SummedEnvelope e_min;

  const SummedEnvelope& winning() const {
    return achieved_on == SumRole::maximum ? e_max : e_min;
  }

  /// Achieving alignment at an arbitrary time, e.g. another t* instance.
  std::vector<double> alignment_at(double t) const {
    return winning().alignment_at(t);
  }
};

/// Worst-case composite magnitude W*, its attaining vertex times, and an
/// achieving alignment. The winning envelope is the one whose vertex attains
/// the larger |V|; on exact ties the maximum envelope wins. The canonical t*
/// is the smallest attaining vertex time, and the reported shifts are the
/// right sigma limits there.
inline AnalysisResult worst_case(std::span<const AttackerSpec> attackers) {
  if (attackers.empty()) raise(errc::empty_input, "no attackers");

  AnalysisResult result;
  result.e_max = build_emax(attackers);
  result.e_min = build_emin(attackers);

  const double peak_max = peak_magnitude(result.e_max);
  const double peak_min = peak_magnitude(result.e_min);
  result.achieved_on =
      peak_min > peak_max ? SumRole::minimum : SumRole::maximum;
  result.w_star = std::max(peak_max, peak_min);

  const SummedEnvelope& winner = result.winning();
  std::size_t first_idx = 0;
  bool found = false;
  for (std::size_t j = 0; j < winner.master.size(); ++j) {
    if (std::fabs(winner.master[j].v) >= result.w_star - kTol) {
      result.t_star_all.push_back(winner.master[j].t);
      if (!found) {
        first_idx = j;
        found = true;
      }
    }
  }
  result.t_star = winner.master[first_idx].t;
  result.s_star.reserve(attackers.size());
  for (std::size_t c = 0; c < winner.components.size(); ++c)
    result.s_star.push_back(winner.tuple_at(c, first_idx).shift_right);
  return result;
}

inline AnalysisResult worst_case(const ChainCase& chain) {
  return worst_case(std::span<const AttackerSpec>(chain.attackers));
}

}  // namespace frame

#endif  // FRAME_AGGREGATE_HPP
