// Copyright 2026 The lcsgame Authors
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

#include "lcs/checks.hpp"
#include "lcs/error.hpp"
#include "lcs/game_graphs.hpp"
#include "lcs/json_io.hpp"
#include "lcs/lcs_system.hpp"
#include "lcs/matrix.hpp"
#include "lcs/representation.hpp"
#include "lcs/solution_group.hpp"
#include "lcs/star_rep.hpp"
#include "lcs/sync_game.hpp"
#include "lcs/zp.hpp"

namespace lcs {
inline constexpr const char *kVersion = "0.1.0";
}
