// Copyright 2026 The netshare Authors.
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

#include "netshare/allocation.hpp"
#include "netshare/welfare.hpp"

namespace netshare {

/// Critical value based mechanism.
///
/// Selects the welfare-maximizing agent set g = delta(V) on the induced graph,
/// connects it with a minimum Steiner tree and charges every selected agent its
/// critical value; everyone else pays zero. Efficient and feasible, but not
/// budget balanced. With the default ground g \ {i} an agent can sometimes
/// gain by overbidding its way into a different welfare-maximizing set
/// (fixture critical-value-gap); CriticalValueGround::all_others prices
/// against every other agent instead.
Allocation run_cvm(Instance const &instance, ReportProfile const &profile,
                   MechanismOptions const &options = {});

/// CV_i = SW(delta(g \ {i})) - (sum of reported values in g \ {i} - C(g)),
/// where delta is recomputed over the ground set g \ {i}, or over every agent
/// but i when `ground` is all_others.
/// Throws InputError when `agent` is not in delta(V) of `table`.
Rational critical_value(Instance const &instance, ReportProfile const &profile,
                        WelfareTable const &table, NodeId const &agent);

/// Same as above on an already-built game; `selected` must contain `agent`.
Rational critical_value(ReportedGame const &game, AgentMask selected, std::size_t agent,
                        std::size_t agent_cap = kDefaultAgentCap,
                        CriticalValueGround ground = CriticalValueGround::selected_others);

}  // namespace netshare
