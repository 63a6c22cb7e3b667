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

#ifndef FRAME_BENCH_HPP
#define FRAME_BENCH_HPP

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "frame/aggregate.hpp"
#include "frame/baseline.hpp"
#include "frame/model.hpp"
#include "frame/oracle.hpp"
#include "frame/stats.hpp"

namespace frame {

/// Fixed-width numeric rendering used by every textual report: 9 significant
/// digits, matching the internal tolerance.
inline std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

struct CorpusRow {
  std::string name;
  int n = 0;
  double w_frame = 0.0;
  double w_pruned = 0.0;
  double w_naive = 0.0;
  double reduction_pct = 0.0;  // vs the pruned baseline
  double verify_gap = 0.0;
};

struct CorpusSummary {
  std::size_t cases = 0;
  double grid_step = 0.0;
  double mean_reduction_pct = 0.0;
  BoxplotStats reduction_stats;
  double mann_whitney_u_stat = 0.0;
  double mann_whitney_p = 1.0;
  bool mann_whitney_exact = false;
};

struct CorpusReport {
  std::vector<CorpusRow> rows;
  CorpusSummary summary;

  std::string to_csv() const {
    std::string out = "case,n,w_frame,w_pruned,w_naive,reduction_pct,verify_gap\n";
    for (const CorpusRow& row : rows) {
      out += row.name;
      out += ',' + std::to_string(row.n);
      out += ',' + format_number(row.w_frame);
      out += ',' + format_number(row.w_pruned);
      out += ',' + format_number(row.w_naive);
      out += ',' + format_number(row.reduction_pct);
      out += ',' + format_number(row.verify_gap);
      out += '\n';
    }
    return out;
  }

  std::string summary_json() const {
    nlohmann::ordered_json doc;
    doc["cases"] = summary.cases;
    doc["grid_step"] = summary.grid_step;
    doc["mean_reduction_pct"] = summary.mean_reduction_pct;
    doc["reduction_quartiles"] = {
        {"min", summary.reduction_stats.min},
        {"q1", summary.reduction_stats.q1},
        {"median", summary.reduction_stats.median},
        {"q3", summary.reduction_stats.q3},
        {"max", summary.reduction_stats.max},
    };
    doc["mann_whitney"] = {
        {"u", summary.mann_whitney_u_stat},
        {"p", summary.mann_whitney_p},
        {"exact", summary.mann_whitney_exact},
    };
    return doc.dump(2) + "\n";
  }
};

/// Analyzes, verifies and compares every case. Each row is checked against
/// the brute-force oracle and audited for the dominance chain
/// W* <= w_pruned <= w_naive; a violation of either is a hard failure.
inline CorpusReport run_corpus(std::span<const ChainCase> cases,
                               double grid_step) {
  if (cases.empty()) raise(errc::empty_input, "empty corpus");

  CorpusReport report;
  report.rows.reserve(cases.size());
  for (const ChainCase& chain : cases) {
    try {
      const AnalysisResult analysis = worst_case(chain);
      const VerificationReport check = verify(chain, analysis, grid_step);
      if (!check.achieved) {
        raise(errc::verification_failed,
              "reported alignment does not attain W*");
      }
      if (!check.sound()) {
        raise(errc::verification_failed,
              "alignment grid found a larger composite than W*");
      }
      const BaselineResult pruned = pruned_envelope(chain.attackers);
      const BaselineResult naive = naive_peak_sum(chain.attackers);
      if (analysis.w_star > pruned.w + kTol || pruned.w > naive.w + kTol) {
        raise(errc::dominance_violation,
              "dominance chain W* <= pruned <= naive violated");
      }
      CorpusRow row;
      row.name = chain.name;
      row.n = chain.size();
      row.w_frame = analysis.w_star;
      row.w_pruned = pruned.w;
      row.w_naive = naive.w;
      row.reduction_pct =
          pruned.w > 0.0 ? pessimism_reduction(pruned.w, analysis.w_star)
                         : 0.0;
      row.verify_gap = check.gap;
      report.rows.push_back(std::move(row));
    } catch (const Error& err) {
      throw Error(err.code(), "case '" + chain.name + "': " + err.what());
    }
  }

  std::vector<double> reductions;
  std::vector<double> frame_sample;
  std::vector<double> pruned_sample;
  reductions.reserve(report.rows.size());
  double total = 0.0;
  for (const CorpusRow& row : report.rows) {
    reductions.push_back(row.reduction_pct);
    frame_sample.push_back(row.w_frame);
    pruned_sample.push_back(row.w_pruned);
    total += row.reduction_pct;
  }
  report.summary.cases = report.rows.size();
  report.summary.grid_step = grid_step;
  report.summary.mean_reduction_pct =
      total / static_cast<double>(report.rows.size());
  report.summary.reduction_stats = boxplot_stats(reductions);
  const MannWhitneyResult mw = mann_whitney_u(frame_sample, pruned_sample);
  report.summary.mann_whitney_u_stat = mw.u;
  report.summary.mann_whitney_p = mw.p;
  report.summary.mann_whitney_exact = mw.exact;
  return report;
}

}  // namespace frame

#endif  // FRAME_BENCH_HPP
