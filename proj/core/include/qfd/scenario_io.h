// Copyright 2026 The qfd Authors
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

#ifndef QFD_SCENARIO_IO_H
#define QFD_SCENARIO_IO_H

#include <string>

#include "qfd/discrimination.h"

namespace qfd {

/// Parses a JSON scenario. Angles may be numbers (radians) or strings such as "3pi/2".
/// Throws ValidationError on malformed input or unknown keys.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);

/// Canonical JSON text (sorted keys, exact angles as strings); the config hash is taken over it.
std::string scenario_to_json(const ScenarioConfig& cfg);

/// 64-bit FNV-1a of scenario_to_json, as 16 hex digits.
std::string config_hash(const ScenarioConfig& cfg);
std::string fnv1a_hex(const std::string& text);

}  // namespace qfd

#endif  // QFD_SCENARIO_IO_H
