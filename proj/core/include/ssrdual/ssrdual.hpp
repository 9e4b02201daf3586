// Copyright 2026 The ssrdual Authors
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

#include "ssrdual/duality.hpp"
#include "ssrdual/entanglement.hpp"
#include "ssrdual/matcore.hpp"
#include "ssrdual/siv.hpp"
#include "ssrdual/ssr.hpp"
#include "ssrdual/states.hpp"

namespace ssrdual {

inline constexpr const char* kVersion = SSRDUAL_VERSION_STRING;

}  // namespace ssrdual
