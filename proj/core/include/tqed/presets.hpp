// Copyright 2026 The tqed Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tqed/scenario.hpp"

namespace tqed {

struct PresetInfo {
  std::string name;
  std::string description;
};

// fig2a .. fig9b, in order.
std::vector<PresetInfo> list_builtin_figures();

// Throws ValidationError for an unknown name.
Scenario builtin_figure(std::string_view name);

}  // namespace tqed
