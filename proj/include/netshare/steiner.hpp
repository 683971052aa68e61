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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace netshare {

/// Minimum Steiner tree of a terminal set. The tree may pass through
/// non-terminal nodes.
struct SteinerResult
{
  NodeSet           terminals;
  Rational          cost;
  std::set<EdgeKey> tree_edges;
};

/// Exact minimum Steiner tree (Dreyfus-Wagner over the terminal set).
///
/// Returns std::nullopt when the terminals do not lie in one connected
/// component. Among equal-cost trees the witness is the one whose sorted edge
/// list is lexicographically smallest. Throws InputError for unknown terminals.
std::optional<SteinerResult> steiner_cost(WeightedGraph const &graph, NodeSet const &terminals);

/// Exhaustive reference: tries every set of Steiner nodes and takes a minimum
/// spanning tree of each induced subgraph. Graphs of at most 12 nodes.
std::optional<SteinerResult> brute_force_steiner_oracle(WeightedGraph const &graph,
                                                        NodeSet const     &terminals);

inline constexpr std::size_t kOracleNodeCap = 12;

/// Graph with a node set collapsed into the source ("super-source").
struct ContractedGraph
{
  WeightedGraph graph;
  NodeSet       merged;
  /// Contracted edge -> original edge it stands for (cheapest attachment).
  std::map<EdgeKey, EdgeKey> original;

  std::set<EdgeKey> expand(std::set<EdgeKey> const &contracted_edges) const;
};

/// Merges `merged` (which must contain the source) into a single node that
/// keeps the source label. Edges inside the merged set disappear; an outside
/// node keeps one edge to the super-source at its cheapest attachment cost.
ContractedGraph contract_into_source(WeightedGraph const &graph, NodeSet const &merged);

/// C(S) for every subset S of a fixed universe of nodes, i.e. the cost of a
/// minimum Steiner tree spanning S plus the graph's source. Built once per
/// graph; lookups are O(1). Universe members may coincide with the source.
class SubsetCostTable
{
public:
  static constexpr std::size_t kMaxUniverse = 20;

  SubsetCostTable(WeightedGraph const &graph, std::vector<NodeId> universe);

  std::vector<NodeId> const &universe() const
  {
    return universe_;
  }

  /// Bit i of `mask` selects universe()[i]. std::nullopt means infeasible.
  std::optional<Rational> cost(std::uint32_t mask) const;

private:
  std::vector<NodeId>       universe_;
  std::vector<std::int64_t> scaled_;
  std::int64_t              scale_ = 1;
};

/// Shares subset tables between callers that query the same graph repeatedly.
/// Internally synchronized.
class SteinerCache
{
public:
  std::shared_ptr<SubsetCostTable const> table(WeightedGraph const     &graph,
                                               std::vector<NodeId> const &universe);

  std::size_t size() const;

private:
  mutable std::mutex                                                 mutex_;
  std::map<std::string, std::shared_ptr<SubsetCostTable const>> tables_;
};

}  // namespace netshare
