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

#include "netshare/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace netshare {

using NodeId  = std::string;
using NodeSet = std::set<NodeId>;

/// Unordered node pair stored with u < v.
struct EdgeKey
{
  NodeId u;
  NodeId v;

  EdgeKey() = default;
  EdgeKey(NodeId a, NodeId b);

  bool touches(NodeId const &node) const
  {
    return u == node || v == node;
  }
  NodeId const &other(NodeId const &node) const
  {
    return u == node ? v : u;
  }

  auto operator<=>(EdgeKey const &) const = default;
};

std::string to_string(EdgeKey const &key);

struct Edge
{
  EdgeKey  key;
  Rational cost;

  bool operator==(Edge const &) const = default;
};

/// Undirected graph with a distinguished source node. Nodes are kept sorted by
/// label and edges sorted by key, so iteration order is deterministic.
class WeightedGraph
{
public:
  WeightedGraph() = default;

  /// Validates labels, endpoints, self-loops, duplicate pairs and costs.
  /// Connectivity is not required.
  WeightedGraph(NodeId source, std::vector<NodeId> nodes, std::vector<Edge> edges);

  NodeId const &source() const
  {
    return source_;
  }
  std::vector<NodeId> const &nodes() const
  {
    return nodes_;
  }
  std::vector<Edge> const &edges() const
  {
    return edges_;
  }

  bool                    contains(NodeId const &node) const;
  std::size_t             index_of(NodeId const &node) const;
  std::optional<Rational> cost(EdgeKey const &key) const;
  NodeSet                 adjacent(NodeId const &node) const;

  /// True when every node is reachable from the source.
  bool connected() const;
  /// Nodes reachable from the source, the source included.
  NodeSet reachable_from_source() const;

  Rational total_cost(std::set<EdgeKey> const &edges) const;

  /// Canonical text form; equal graphs have equal fingerprints.
  std::string fingerprint() const;

  bool operator==(WeightedGraph const &) const = default;

private:
  NodeId              source_;
  std::vector<NodeId> nodes_;
  std::vector<Edge>   edges_;
};

/// The true world: who the agents are, what each edge costs, and what each
/// agent privately values being connected at.
struct Instance
{
  WeightedGraph             graph;
  std::vector<NodeId>       agents;  // sorted, source excluded
  std::map<NodeId, Rational> valuations;

  NodeId const &source() const
  {
    return graph.source();
  }
  bool                 is_agent(NodeId const &node) const;
  std::vector<EdgeKey> adjacent_edges(NodeId const &node) const;

  bool operator==(Instance const &) const = default;
};

/// Builds and validates an instance. The true graph must be connected.
Instance make_instance(NodeId source, std::vector<NodeId> agents, std::vector<Edge> edges,
                       std::map<NodeId, Rational> valuations);

/// One agent's declaration: the adjacent edges it offers and its stated value.
struct AgentReport
{
  std::set<EdgeKey> edges;
  Rational          valuation;

  bool operator==(AgentReport const &) const = default;
};

/// Reports of every agent. The source always offers all of its true edges
/// and therefore has no entry.
struct ReportProfile
{
  NodeId                         source;
  std::map<NodeId, AgentReport> reports;

  AgentReport const &at(NodeId const &agent) const;

  bool operator==(ReportProfile const &) const = default;
};

ReportProfile truthful_profile(Instance const &instance);

/// Throws InputError unless `report` only declares true edges of `agent`
/// and has a non-negative valuation.
void validate_report(Instance const &instance, NodeId const &agent, AgentReport const &report);
void validate_profile(Instance const &instance, ReportProfile const &profile);

/// Keeps an edge iff both endpoints declare it. May be disconnected.
WeightedGraph induced_graph(Instance const &instance, ReportProfile const &profile);

/// Agent neighbours of `node` in the graph induced by `profile`.
NodeSet neighbors(ReportProfile const &profile, NodeId const &node);

/// Copy of `profile` with `agent`'s report replaced.
ReportProfile apply_deviation(Instance const &instance, ReportProfile const &profile,
                              NodeId const &agent, AgentReport report);

/// Instance with edge `key` re-priced; the report profile stays meaningful.
Instance with_edge_cost(Instance const &instance, EdgeKey const &key, Rational cost);

struct InstanceDocument
{
  Instance                     instance;
  std::optional<ReportProfile> reports;  // agents not listed report truthfully
};

/// JSON instance document:
///   {"source": "s", "agents": [...], "edges": [{"u":..,"v":..,"cost":..}],
///    "valuations": {label: number}, "reports": {label: {"edges": [[u,v]], "valuation": number}}}
/// Numbers are JSON integers or strings holding an integer, decimal or p/q.
InstanceDocument parse_instance_document(std::string_view text);
Instance         parse_instance(std::string_view text);

std::string serialize_instance(Instance const &instance, ReportProfile const *reports = nullptr);

}  // namespace netshare
