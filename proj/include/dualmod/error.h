// Copyright 2026 The dualmod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUALMOD_ERROR_H_
#define DUALMOD_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>

namespace dualmod {

enum class ErrorCode {
  kSchema,
  kIo,
  kInvalidArgument,
  kGroundSetTooLarge,
  kNegativeEta,
  kNotStrictlyMonotone,
  kZeroTotal,
  kZeroCostCoordinate,
  kDomainError,
  kInfiniteDensity,
  kEmptyResidual,
  kWeightSumMismatch,
  kAlphaOutOfRange,
  kNotLinearCost,
  kStructure,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `element` names
// the offending ground-set index when there is one (ZeroCostCoordinate) and
// `subset` the offending mask (InfiniteDensity).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> element = std::nullopt,
        std::optional<unsigned long long> subset = std::nullopt)
      : std::runtime_error(message),
        code_(code),
        element_(element),
        subset_(subset) {}

  ErrorCode code() const { return code_; }
  std::optional<int> element() const { return element_; }
  std::optional<unsigned long long> subset() const { return subset_; }

 private:
  ErrorCode code_;
  std::optional<int> element_;
  std::optional<unsigned long long> subset_;
};

}  // namespace dualmod

#endif  // DUALMOD_ERROR_H_
