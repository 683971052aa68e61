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

#include <map>
#include <optional>
#include <utility>

namespace netshare {

/// Repeated selection mechanism.
///
/// Runs in stages. Each stage picks, among the remaining agents, the subset
/// whose equal share C(S)/|S| is smallest subject to the share not dropping
/// below the previous stage's and every member valuing it at least that much.
/// Members pay the share, agents valuing less than it drop out for good, and
/// the connections built so far become free for later stages. Budget balanced,
/// truthful and feasible, but not efficient.
Allocation run_rsm(Instance const &instance, ReportProfile const &profile,
                   MechanismOptions const &options = {});

struct StageChoice
{
  NodeSet  selected;
  Rational share;
};

/// One stage's optimization over `remaining` on `contracted` (whose source is
/// the super-source). Ties on the share prefer the larger subset, then the
/// lexicographically smallest one. std::nullopt when nothing is feasible.
/// A remaining agent that is no longer a node of `contracted` is treated as
/// already merged into the source.
std::optional<StageChoice> stage_solve(WeightedGraph const              &contracted,
                                       NodeSet const                    &remaining,
                                       std::map<NodeId, Rational> const &reported_values,
                                       Rational const                   &previous_share);

}  // namespace netshare
