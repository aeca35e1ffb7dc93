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

#include "vgpn/error.hpp"

namespace vgpn
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::EmptyCommand: return "EmptyCommand";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::NoVerb: return "NoVerb";
    case ErrorCode::MultipleVerbs: return "MultipleVerbs";
    case ErrorCode::UngrammaticalCommand: return "UngrammaticalCommand";
    case ErrorCode::NoTemplate: return "NoTemplate";
    case ErrorCode::AmbiguousRegistry: return "AmbiguousRegistry";
    case ErrorCode::InvalidResource: return "InvalidResource";
    case ErrorCode::NoArmVisible: return "NoArmVisible";
    case ErrorCode::DegenerateArm: return "DegenerateArm";
    case ErrorCode::NoGroundIntersection: return "NoGroundIntersection";
    case ErrorCode::AimTooClose: return "AimTooClose";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::NoSuchObject: return "NoSuchObject";
    case ErrorCode::MissingIntersection: return "MissingIntersection";
    case ErrorCode::SceneInvalid: return "SceneInvalid";
    case ErrorCode::StartOccupied: return "StartOccupied";
    case ErrorCode::GoalOccupied: return "GoalOccupied";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::UnsupportedInstruction: return "UnsupportedInstruction";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::UnknownSession: return "UnknownSession";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message)
: std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message)
{
}

}  // namespace vgpn
