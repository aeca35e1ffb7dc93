// Copyright 2026 The VGPN Authors
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

#ifndef VGPN__ERROR_HPP_
#define VGPN__ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vgpn
{

enum class ErrorCode {
  // command language
  EmptyCommand,
  UnknownWord,
  NoVerb,
  MultipleVerbs,
  UngrammaticalCommand,
  NoTemplate,
  AmbiguousRegistry,
  InvalidResource,
  // pointing geometry
  NoArmVisible,
  DegenerateArm,
  NoGroundIntersection,
  AimTooClose,
  InvalidTransform,
  InvalidFrame,
  // world model
  NoSuchObject,
  MissingIntersection,
  SceneInvalid,
  // navigation
  StartOccupied,
  GoalOccupied,
  Unreachable,
  UnsupportedInstruction,
  // pipeline / harness / service
  EmptyInput,
  SpecInvalid,
  UnknownSession,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a stable code, so callers can branch on the kind without parsing text.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message);

  ErrorCode code() const noexcept { return code_; }
  /// The text without the code prefix that what() carries.
  const std::string & message() const noexcept { return message_; }

private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace vgpn

#endif  // VGPN__ERROR_HPP_
