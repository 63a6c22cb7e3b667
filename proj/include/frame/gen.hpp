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

#ifndef FRAME_GEN_HPP
#define FRAME_GEN_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "frame/model.hpp"
#include "frame/rng.hpp"

namespace frame {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct IntRange {
  int lo = 1;
  int hi = 1;
};

/// Parameters for seeded synthetic-case generation. Defaults keep timing
/// windows narrow enough that the brute-force alignment grid at step 0.05
/// stays well inside the combination budget up to six attackers.
struct GenConfig {
  IntRange n_attackers{1, 6};
  Range magnitude{0.2, 1.2};     // |m|
  Range p_fraction{0.2, 0.8};    // p as a fraction of e, strictly inside (0,1)
  Range duration{0.5, 2.0};      // e
  Range window_width{0.0, 0.5};  // b - a
  Range window_start{0.0, 2.0};  // a
  double negative_prob = 0.5;    // chance an attacker has m < 0
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_range(const Range& r, const char* name) {
  if (!(std::isfinite(r.lo) && std::isfinite(r.hi)) || r.lo > r.hi) {
    raise(errc::validation_error,
          std::string("invalid range for ") + name);
  }
}

}  // namespace detail

inline void validate_config(const GenConfig& cfg) {
  if (cfg.n_attackers.lo < 1 || cfg.n_attackers.lo > cfg.n_attackers.hi)
    raise(errc::validation_error, "invalid attacker-count range");
  detail::check_range(cfg.magnitude, "magnitude");
  detail::check_range(cfg.p_fraction, "p_fraction");
  detail::check_range(cfg.duration, "duration");
  detail::check_range(cfg.window_width, "window_width");
  detail::check_range(cfg.window_start, "window_start");
  if (cfg.magnitude.lo < 0.0)
    raise(errc::validation_error, "magnitude range must be non-negative");
  if (!(cfg.p_fraction.lo > 0.0 && cfg.p_fraction.hi < 1.0))
    raise(errc::validation_error, "p_fraction must lie strictly inside (0,1)");
  if (!(cfg.duration.lo > 0.0))
    raise(errc::validation_error, "duration must be positive");
  if (cfg.window_width.lo < 0.0)
    raise(errc::validation_error, "window width must be non-negative");
  if (cfg.negative_prob < 0.0 || cfg.negative_prob > 1.0)
    raise(errc::validation_error, "negative_prob must lie in [0,1]");
}

/// Deterministic synthetic case: the draw stream depends only on
/// (cfg.seed, index). Directions alternate so a corpus exercises both
/// chain-head polarities.
inline ChainCase gen_case(const GenConfig& cfg, std::uint64_t index) {
  validate_config(cfg);
  Xoshiro256StarStar rng(cfg.seed + index * 0x9E3779B97F4A7C15ULL);

  ChainCase chain;
  char name[32];
  std::snprintf(name, sizeof(name), "case_%05llu",
                static_cast<unsigned long long>(index));
  chain.name = name;
  chain.direction = index % 2 == 0 ? Direction::rise : Direction::fall;

  const int span = cfg.n_attackers.hi - cfg.n_attackers.lo + 1;
  const int n = cfg.n_attackers.lo +
                static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
  chain.attackers.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const double e = rng.uniform(cfg.duration.lo, cfg.duration.hi);
    const double p = e * rng.uniform(cfg.p_fraction.lo, cfg.p_fraction.hi);
    double m = rng.uniform(cfg.magnitude.lo, cfg.magnitude.hi);
    if (rng.bernoulli(cfg.negative_prob)) m = -m;
    const double a = rng.uniform(cfg.window_start.lo, cfg.window_start.hi);
    const double b =
        a + rng.uniform(cfg.window_width.lo, cfg.window_width.hi);
    chain.attackers.push_back(validate(p, e, m, a, b, i));
  }
  return chain;
}

}  // namespace frame

#endif  // FRAME_GEN_HPP
