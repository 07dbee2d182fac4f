// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hjhalf {

/// A piecewise-linear function was not strictly monotone where an inverse
/// was required.
struct NotMonotoneError : std::runtime_error {
  explicit NotMonotoneError(const std::string& what) : std::runtime_error(what) {}
};

/// The Hamiltonian is not coercive (tails must satisfy left < 0 < right).
struct NotCoerciveError : std::runtime_error {
  explicit NotCoerciveError(const std::string& what) : std::runtime_error(what) {}
};

/// Running infimum diverges (left tail slope > 0 makes inf over (-inf,p] = -inf).
struct UnboundedError : std::runtime_error {
  explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

/// A flux function required to be strictly decreasing has a segment or tail
/// with slope >= 0.
struct NotStrictlyDecreasingError : std::runtime_error {
  explicit NotStrictlyDecreasingError(const std::string& what) : std::runtime_error(what) {}
};

/// A set limiter failed validation against its Hamiltonian.
struct InvalidLimiterError : std::runtime_error {
  explicit InvalidLimiterError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-step ODE integration produced a non-increasing E table; the step is
/// too coarse for the requested tolerance.
struct StepTooLargeError : std::runtime_error {
  explicit StepTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// The time horizon does not certify the envelope tail bound R*E'(T) <= min(1, -F(E(T))).
struct TailBoundUnverifiedError : std::runtime_error {
  explicit TailBoundUnverifiedError(const std::string& what) : std::runtime_error(what) {}
};

/// Test-function verification failed; message carries the offending samples.
struct VerificationFailedError : std::runtime_error {
  explicit VerificationFailedError(const std::string& what) : std::runtime_error(what) {}
};

/// Time step exceeds the monotonicity bound dt <= dx / sigma.
struct CFLViolationError : std::runtime_error {
  explicit CFLViolationError(const std::string& what) : std::runtime_error(what) {}
};

/// Named preset does not exist.
struct UnknownPresetError : std::runtime_error {
  explicit UnknownPresetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hjhalf
