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

#ifndef LAMBDAPHONON_HILBERT_HPP
#define LAMBDAPHONON_HILBERT_HPP

#include <stdexcept>
#include <string>

namespace lambdaphonon {

/// The three emitter levels of the Lambda configuration. The integer values
/// fix the basis order.
enum class EmitterLevel : int { kDown = 0, kUp = 1, kExcited = 2 };

inline const char* to_string(EmitterLevel s) {
  switch (s) {
    case EmitterLevel::kDown:
      return "down";
    case EmitterLevel::kUp:
      return "up";
    case EmitterLevel::kExcited:
      return "excited";
  }
  throw std::invalid_argument("invalid emitter level");
}

inline EmitterLevel emitter_level_from_string(const std::string& s) {
  if (s == "down") return EmitterLevel::kDown;
  if (s == "up") return EmitterLevel::kUp;
  if (s == "excited") return EmitterLevel::kExcited;
  throw std::invalid_argument("invalid emitter level '" + s +
                              "' (expected down/up/excited)");
}

/// Composite space of the three-level emitter and one truncated bosonic mode.
///
/// Basis order is emitter-major: the composite index of |level, m> is
/// level * fock_cutoff + m, with m = 0 .. fock_cutoff-1. Fock states of a
/// given emitter level are therefore contiguous, which keeps ladder
/// operators banded.
class HilbertSpace {
 public:
  static constexpr int kEmitterDim = 3;

  explicit HilbertSpace(int fock_cutoff) : fock_cutoff_(fock_cutoff) {
    if (fock_cutoff < 1) {
      throw std::invalid_argument("fock_cutoff must be >= 1, got " +
                                  std::to_string(fock_cutoff));
    }
  }

  int fock_cutoff() const { return fock_cutoff_; }
  int total_dim() const { return kEmitterDim * fock_cutoff_; }

  int index(EmitterLevel level, int fock) const {
    if (fock < 0 || fock >= fock_cutoff_) {
      throw std::invalid_argument("fock index " + std::to_string(fock) +
                                  " outside [0, " +
                                  std::to_string(fock_cutoff_) + ")");
    }
    return static_cast<int>(level) * fock_cutoff_ + fock;
  }

  EmitterLevel level_of(int composite) const {
    check_composite(composite);
    return static_cast<EmitterLevel>(composite / fock_cutoff_);
  }

  int fock_of(int composite) const {
    check_composite(composite);
    return composite % fock_cutoff_;
  }

  bool operator==(const HilbertSpace& other) const {
    return fock_cutoff_ == other.fock_cutoff_;
  }

 private:
  void check_composite(int composite) const {
    if (composite < 0 || composite >= total_dim()) {
      throw std::invalid_argument("composite index out of range");
    }
  }

  int fock_cutoff_;
};

}  // namespace lambdaphonon

#endif  // LAMBDAPHONON_HILBERT_HPP
