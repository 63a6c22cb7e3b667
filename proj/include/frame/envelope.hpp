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

#ifndef FRAME_ENVELOPE_HPP
#define FRAME_ENVELOPE_HPP

#include <cstddef>
#include <vector>

#include "frame/model.hpp"

namespace frame {

/// Joint vertex of a piecewise-linear envelope, annotated with the one-sided
/// limits of the achieving shift at its time:
///   shift_left  = lim_{eps->0-} sigma(t + eps)
///   shift_right = lim_{eps->0+} sigma(t + eps)
/// Both limits lie inside the owning attacker's timing window.
struct Vertex {
  double t = 0.0;
  double v = 0.0;
  double shift_left = 0.0;
  double shift_right = 0.0;
};

/// One-sided shift limits returned by a sigma query.
struct ShiftLimits {
  double left = 0.0;
  double right = 0.0;
};

enum class EnvelopeKind { outer, inner };

/// Extreme-value trace of one attacker bump sliding over its timing window,
/// together with the sigma function recording which shift achieves the trace.
///
/// The outer envelope traces the extreme toward the bump's own polarity
/// (maximum for positive magnitude, minimum for negative); the inner envelope
/// traces the opposite extreme. Both are piecewise linear, so the vertex list
/// carries all information: voltages interpolate linearly between vertices
/// and are zero outside [front.t, back.t].
struct Envelope {
  EnvelopeKind kind = EnvelopeKind::outer;
  int owner = 1;       // attacker index
  AttackerSpec theta;  // back-reference for the window and shape
  std::vector<Vertex> vertices;
};

/// Outer envelope of an attacker. With window [a, b], peak offset p, end
/// offset e and magnitude m, the trace rises from (a, 0) to (a+p, m), holds m
/// across the window, and falls from (b+p, m) to (b+e, 0). The achieving
/// shift is a on the rise, t - p on the plateau, and b on the fall.
inline Envelope build_outer(const AttackerSpec& att) {
  const double a = att.earliest();
  const double b = att.latest();
  const double p = att.peak();
  const double e = att.end();
  const double m = att.magnitude();
  Envelope env{EnvelopeKind::outer, att.index, att, {}};
  env.vertices = {
      {a, 0.0, a, a},
      {a + p, m, a, a},
      {b + p, m, b, b},
      {b + e, 0.0, b, b},
  };
  return env;
}

/// Inner envelope of an attacker. When the window is narrower than the bump
/// (b < a + e) no feasible shift can silence the attacker between b and a+e,
/// and the trace is the triangle (b, 0) -> (b + p*delta, m*delta) -> (a+e, 0)
/// with delta = (a + e - b) / e. The achieving shift jumps from b to a across
/// the peak, hence the two-sided annotation there. Otherwise the trace is
/// identically zero and a single vertex (b, 0, [b, a]) records both one-sided
/// achievers.
inline Envelope build_inner(const AttackerSpec& att) {
  const double a = att.earliest();
  const double b = att.latest();
  const double p = att.peak();
  const double e = att.end();
  const double m = att.magnitude();
  Envelope env{EnvelopeKind::inner, att.index, att, {}};
  if (b < a + e - kTol) {
    const double delta = (a + e - b) / e;
    env.vertices = {
        {b, 0.0, b, b},
        {b + p * delta, m * delta, b, a},
        {a + e, 0.0, a, a},
    };
  } else {
    env.vertices = {{b, 0.0, b, a}};
  }
  return env;
}

/// Envelope voltage at time t: linear interpolation between the bracketing
/// vertices, zero outside the support. Boundary vertices carry V = 0, so the
/// trace is continuous.
inline double value_at(const Envelope& env, double t) {
  const auto& vs = env.vertices;
  if (vs.size() < 2 || t <= vs.front().t || t >= vs.back().t) return 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (t > vs[i + 1].t) continue;
    const double dt = vs[i + 1].t - vs[i].t;
    if (dt <= kTol) return vs[i + 1].v;
    const double w = (t - vs[i].t) / dt;
    return vs[i].v + w * (vs[i + 1].v - vs[i].v);
  }
  return 0.0;
}

/// Sigma query: the shift(s) achieving the envelope value at time t.
///
/// At a vertex the stored one-sided pair is returned (coincident vertices are
/// combined, keeping the leftmost left limit and rightmost right limit).
/// Strictly between vertices v_i and v_{i+1} sigma is continuous and
/// interpolates v_i.shift_right -> v_{i+1}.shift_left. Outside the support
/// the nearest vertex limit extends as a constant, which keeps
/// eval_shifted(theta, shift, t) equal to the (zero) envelope value there.
inline ShiftLimits shift_at(const Envelope& env, double t) {
  const auto& vs = env.vertices;
  if (t < vs.front().t - kTol)
    return {vs.front().shift_left, vs.front().shift_left};
  if (t > vs.back().t + kTol)
    return {vs.back().shift_right, vs.back().shift_right};

  std::size_t first = vs.size();
  std::size_t last = vs.size();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (nearly_equal(vs[i].t, t)) {
      if (first == vs.size()) first = i;
      last = i;
    }
  }
  if (first != vs.size())
    return {vs[first].shift_left, vs[last].shift_right};

  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (t > vs[i + 1].t) continue;
    const double dt = vs[i + 1].t - vs[i].t;
    const double w = dt <= kTol ? 1.0 : (t - vs[i].t) / dt;
    const double s =
        vs[i].shift_right + w * (vs[i + 1].shift_left - vs[i].shift_right);
    return {s, s};
  }
  return {vs.back().shift_right, vs.back().shift_right};
}

}  // namespace frame

#endif  // FRAME_ENVELOPE_HPP
