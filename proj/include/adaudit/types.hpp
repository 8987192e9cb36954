// Copyright 2026 The adaudit Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace adaudit {

enum class Gender : std::uint8_t { Male, Female };

using CountyId = std::uint32_t;
using UserId = std::uint64_t;

/// Advertiser-declared campaign objective, as it appears on the wire.
enum class Objective : std::uint8_t { Conversion, Reach };

/// Default campaign budget in currency units.
inline constexpr double kDefaultBudget = 50.0;

std::string_view to_string(Gender g);
std::string_view to_string(Objective o);
Gender gender_from_string(std::string_view s);
Objective objective_from_string(std::string_view s);

inline Gender opposite(Gender g) {
  return g == Gender::Male ? Gender::Female : Gender::Male;
}

}  // namespace adaudit
