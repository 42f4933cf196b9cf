// Copyright 2026 The lambda-phonon authors
//
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

#ifndef LAMBDAPHONON_ERRORS_HPP
#define LAMBDAPHONON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lambdaphonon {

/// Fock-space cutoff too small for the requested object. Carries the minimal
/// cutoff estimated to be adequate.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_cutoff)
      : std::runtime_error(what), required_cutoff_(required_cutoff) {}
  int required_cutoff() const { return required_cutoff_; }

 private:
  int required_cutoff_;
};

/// Linear or eigen solver failed to reach its tolerance. Carries the final
/// residual for diagnostics.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Steady-state null space is not one-dimensional.
class MultiplicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive step control collapsed below the minimal step.
class StiffnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Correlation window too short for the requested tail tolerance. Carries the
/// estimated adequate window length (in 1/Omega time units).
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, double required_t_max)
      : std::runtime_error(what), required_t_max_(required_t_max) {}
  double required_t_max() const { return required_t_max_; }

 private:
  double required_t_max_;
};

/// Double-and-compare cutoff gate failed: observables at cutoffs N and N+10
/// disagree beyond the gate tolerance.
class ConvergenceGateError : public std::runtime_error {
 public:
  ConvergenceGateError(const std::string& what, double relative_change)
      : std::runtime_error(what), relative_change_(relative_change) {}
  double relative_change() const { return relative_change_; }

 private:
  double relative_change_;
};

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_ERRORS_HPP
