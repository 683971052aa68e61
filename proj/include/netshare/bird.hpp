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

namespace netshare {

/// Bird rule: grow a minimum spanning tree from the source with Prim's
/// algorithm and charge each agent the cost of the edge that attached it.
/// Ties go to the edge with the smaller key. Valuations play no part and
/// utilities are left empty. Throws InputError on a disconnected graph.
Allocation bird_allocation(WeightedGraph const &graph);

/// Bird rule on the graph induced by `profile`. Agents cut off from the
/// source are left unselected.
Allocation run_bird(Instance const &instance, ReportProfile const &profile);

}  // namespace netshare
