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

#include "netshare/bird.hpp"

#include <optional>

namespace netshare {
namespace {

/// Prim from the source over the nodes it can reach.
Allocation prim_shares(WeightedGraph const &graph)
{
  Allocation out;
  NodeSet    in_tree{graph.source()};
  out.total_cost = Rational{0};

  while (true)
  {
    Edge const *best = nullptr;
    for (auto const &edge : graph.edges())
    {
      bool const u_in = in_tree.count(edge.key.u) > 0;
      bool const v_in = in_tree.count(edge.key.v) > 0;
      if (u_in == v_in)
      {
        continue;
      }
      // Edges are scanned in key order, so strict < keeps the smaller key.
      if (best == nullptr || edge.cost < best->cost)
      {
        best = &edge;
      }
    }
    if (best == nullptr)
    {
      break;
    }
    NodeId const &joined = in_tree.count(best->key.u) > 0 ? best->key.v : best->key.u;
    in_tree.insert(joined);
    out.selected.insert(joined);
    out.shares[joined] = best->cost;
    out.tree_edges.insert(best->key);
    out.total_cost += best->cost;
  }
  return out;
}

}  // namespace

Allocation bird_allocation(WeightedGraph const &graph)
{
  if (!graph.connected())
  {
    throw InputError("Bird rule needs a connected graph");
  }
  Allocation out     = prim_shares(graph);
  out.social_welfare = Rational{0};
  return out;
}

Allocation run_bird(Instance const &instance, ReportProfile const &profile)
{
  Allocation out = prim_shares(induced_graph(instance, profile));
  Rational   reported{0};
  for (auto const &agent : out.selected)
  {
    reported += profile.at(agent).valuation;
  }
  out.social_welfare = reported - out.total_cost;
  settle_utilities(instance, out);
  return out;
}

}  // namespace netshare
