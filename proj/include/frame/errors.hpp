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

#ifndef FRAME_ERRORS_HPP
#define FRAME_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace frame {

enum class errc {
  non_finite_parameter,
  peak_order_violation,
  window_order_violation,
  empty_input,
  length_mismatch,
  combination_budget_exceeded,
  zero_baseline,
  empty_sample,
  file_not_found,
  schema_error,
  validation_error,
  verification_failed,
  dominance_violation,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::non_finite_parameter: return "NonFiniteParameter";
    case errc::peak_order_violation: return "PeakOrderViolation";
    case errc::window_order_violation: return "WindowOrderViolation";
    case errc::empty_input: return "EmptyInput";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::combination_budget_exceeded: return "CombinationBudgetExceeded";
    case errc::zero_baseline: return "ZeroBaseline";
    case errc::empty_sample: return "EmptySample";
    case errc::file_not_found: return "FileNotFound";
    case errc::schema_error: return "SchemaError";
    case errc::validation_error: return "ValidationError";
    case errc::verification_failed: return "VerificationFailed";
    case errc::dominance_violation: return "DominanceViolation";
  }
  return "UnknownError";
}

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace frame

#endif  // FRAME_ERRORS_HPP
