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

#include "netshare/graph.hpp"
#include "netshare/steiner.hpp"
#include "netshare/welfare.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace netshare {

/// One stage of the repeated selection mechanism.
struct StageRecord
{
  int               stage = 0;
  NodeSet           selected;        // S_t
  Rational          share;           // X_t, paid by every member of S_t
  Rational          stage_cost;      // C(S_t) on the stage's contracted graph
  NodeSet           excluded;        // W_t
  std::set<EdgeKey> edges;           // E_t, in original edge labels
  NodeSet           remaining;       // N_t
  NodeSet           steiner_points;  // unselected, unmerged nodes the stage tree passes through
};

/// What a mechanism decides for one report profile.
struct Allocation
{
  NodeSet                         selected;    // g
  std::set<EdgeKey>               tree_edges;  // f
  std::map<NodeId, Rational>      shares;      // x, zero for unselected agents
  std::map<NodeId, Rational>      utilities;   // from true valuations
  Rational                        social_welfare;  // reported values of g minus C(g)
  Rational                        total_cost;      // cost of f
  std::optional<std::vector<StageRecord>> stage_trace;

  Rational total_shares() const;
  Rational share(NodeId const &agent) const;
  Rational utility(NodeId const &agent) const;
};

enum class Mechanism
{
  cvm,
  rsm,
  bird,
};

std::string_view to_string(Mechanism mechanism);
/// Throws InputError for names other than cvm, rsm, bird.
Mechanism parse_mechanism(std::string_view name);

/// How RSM makes already-built connections free for later stages.
enum class RsmContraction
{
  /// Merge every node touched by a purchased edge into the source.
  purchased_tree,
  /// Merge only the selected agents into the source.
  selected_nodes,
};

/// Which agents CVM may reselect when pricing a selected agent i.
enum class CriticalValueGround
{
  /// delta is recomputed over g \ {i}.
  selected_others,
  /// delta is recomputed over every agent except i.
  all_others,
};

struct MechanismOptions
{
  std::size_t    agent_cap   = kDefaultAgentCap;
  /// When false, CVM skips reconstructing f; shares and utilities are unaffected.
  bool           build_tree  = true;
  RsmContraction contraction = RsmContraction::purchased_tree;
  CriticalValueGround cv_ground = CriticalValueGround::selected_others;
  SteinerCache  *cache       = nullptr;
};

Allocation run_mechanism(Mechanism mechanism, Instance const &instance,
                         ReportProfile const &profile, MechanismOptions const &options = {});

/// Fills utilities (true valuation minus share for selected agents, zero
/// otherwise) and zero shares for unselected agents.
void settle_utilities(Instance const &instance, Allocation &allocation);

/// JSON allocation document; stages are included only when `with_trace`.
std::string allocation_to_json(Allocation const &allocation, Mechanism mechanism, bool with_trace);

}  // namespace netshare
