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

#ifndef FRAME_MODEL_HPP
#define FRAME_MODEL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "frame/errors.hpp"

namespace frame {

/// Absolute tolerance on times and voltages. Inputs are circuit-scale
/// magnitudes near unity, so an absolute comparison is adequate.
inline constexpr double kTol = 1e-9;

inline bool nearly_equal(double x, double y, double tol = kTol) {
  return std::fabs(x - y) <= tol;
}

/// Single-peak noise bump: rises linearly from (0, 0) to (peak, magnitude),
/// falls linearly back to zero at (end, 0), and is zero elsewhere.
struct Triangle {
  double peak = 0.0;       // time of the extremum, relative to bump start
  double end = 0.0;        // time the bump returns to zero
  double magnitude = 0.0;  // signed peak voltage; 0 denotes a null attacker
};

/// Feasible arrival-time interval [earliest, latest] for a bump.
struct TimingWindow {
  double earliest = 0.0;
  double latest = 0.0;

  double width() const { return latest - earliest; }
};

/// One attacker: bump shape plus its timing window.
struct AttackerSpec {
  Triangle shape;
  TimingWindow window;
  int index = 1;  // 1-based ordinal within its chain

  double peak() const { return shape.peak; }
  double end() const { return shape.end; }
  double magnitude() const { return shape.magnitude; }
  double earliest() const { return window.earliest; }
  double latest() const { return window.latest; }
};

/// Chain-head switch direction this attacker set corresponds to.
enum class Direction { rise, fall };

inline const char* direction_name(Direction d) {
  return d == Direction::rise ? "rise" : "fall";
}

/// A named attacker chain for one chain-head direction.
struct ChainCase {
  std::string name;
  Direction direction = Direction::fall;
  std::vector<AttackerSpec> attackers;

  int size() const { return static_cast<int>(attackers.size()); }
};

/// Validates raw attacker parameters (p, e, m, a, b) and builds the spec.
/// Requires 0 < p < e strictly, a <= b, and all values finite.
inline AttackerSpec validate(double p, double e, double m, double a, double b,
                             int index = 1) {
  const auto ctx = [&] { return " (attacker " + std::to_string(index) + ")"; };
  if (!std::isfinite(p) || !std::isfinite(e) || !std::isfinite(m) ||
      !std::isfinite(a) || !std::isfinite(b)) {
    raise(errc::non_finite_parameter,
          "attacker parameters must be finite" + ctx());
  }
  if (!(0.0 < p && p < e)) {
    raise(errc::peak_order_violation,
          "need 0 < p < e, got p=" + std::to_string(p) +
              " e=" + std::to_string(e) + ctx());
  }
  if (a > b) {
    raise(errc::window_order_violation,
          "window must satisfy a <= b, got a=" + std::to_string(a) +
              " b=" + std::to_string(b) + ctx());
  }
  return AttackerSpec{Triangle{p, e, m}, TimingWindow{a, b}, index};
}

/// Bump voltage at time t. Continuous everywhere, zero outside [0, end].
inline double eval_triangle(const Triangle& tri, double t) {
  if (t <= 0.0 || t >= tri.end) return 0.0;
  if (t <= tri.peak) return tri.magnitude / tri.peak * t;
  return -tri.magnitude / (tri.end - tri.peak) * (t - tri.end);
}

/// Bump voltage at time t when the attacker arrives at shift s.
inline double eval_shifted(const AttackerSpec& att, double s, double t) {
  return eval_triangle(att.shape, t - s);
}

}  // namespace frame

#endif  // FRAME_MODEL_HPP
