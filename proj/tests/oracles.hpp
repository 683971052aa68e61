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

// Slow, obviously-correct reference implementations used only by tests.

#pragma once

#include "netshare/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace netshare::oracle {

inline Rational R(std::int64_t num, std::int64_t den = 1)
{
  return Rational{num, den};
}

/// Cheapest connected edge set touching every terminal, found by trying every
/// subset of edges. Fine up to ~16 edges.
inline std::optional<Rational> edge_subset_steiner(WeightedGraph const &graph, NodeSet const &terminals)
{
  if (terminals.size() <= 1)
  {
    return Rational{0};
  }
  auto const &edges = graph.edges();
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << edges.size()); ++mask)
  {
    std::map<NodeId, NodeId> parent;
    std::function<NodeId(NodeId const &)> find = [&](NodeId const &x) -> NodeId {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x)
      {
        return x;
      }
      return it->second = find(it->second);
    };
    Rational cost{0};
    NodeSet  touched;
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
      if ((mask >> e) & 1U)
      {
        cost += edges[e].cost;
        touched.insert(edges[e].key.u);
        touched.insert(edges[e].key.v);
        parent[find(edges[e].key.u)] = find(edges[e].key.v);
      }
    }
    if (best && cost >= *best)
    {
      continue;
    }
    bool ok = std::includes(touched.begin(), touched.end(), terminals.begin(), terminals.end());
    if (ok)
    {
      NodeId const root = find(*touched.begin());
      for (auto const &node : touched)
      {
        ok = ok && find(node) == root;
      }
    }
    if (ok)
    {
      best = cost;
    }
  }
  return best;
}

/// C(S) on the graph a profile induces: Steiner cost of S plus the source.
inline std::optional<Rational> cost_of(Instance const &instance, ReportProfile const &profile, NodeSet subset)
{
  subset.insert(instance.source());
  return edge_subset_steiner(induced_graph(instance, profile), subset);
}

inline std::vector<NodeSet> subsets_of(NodeSet const &ground)
{
  std::vector<NodeId> items(ground.begin(), ground.end());
  std::vector<NodeSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << items.size()); ++mask)
  {
    NodeSet s;
    for (std::size_t i = 0; i < items.size(); ++i)
    {
      if ((mask >> i) & 1U)
      {
        s.insert(items[i]);
      }
    }
    out.push_back(s);
  }
  return out;
}

/// Social welfare of S; std::nullopt stands for minus infinity.
inline std::optional<Rational> welfare_of(Instance const &instance, ReportProfile const &profile,
                                          NodeSet const &subset)
{
  auto c = cost_of(instance, profile, subset);
  if (!c)
  {
    return std::nullopt;
  }
  Rational total{0};
  for (auto const &agent : subset)
  {
    total += profile.at(agent).valuation;
  }
  return total - *c;
}

inline bool welfare_less(std::optional<Rational> const &a, std::optional<Rational> const &b)
{
  if (!a)
  {
    return b.has_value();
  }
  return b && *a < *b;
}

/// Bottom-up welfare selection written directly over label sets: delta(S) is
/// the best delta of S minus one element (ties to the lexicographically
/// smallest predecessor), replaced by S when S is at least as good.
inline std::map<NodeSet, NodeSet> delta_table(Instance const &instance, ReportProfile const &profile,
                                              NodeSet const &ground)
{
  auto all = subsets_of(ground);
  std::stable_sort(all.begin(), all.end(), [](NodeSet const &a, NodeSet const &b) { return a.size() < b.size(); });
  std::map<NodeSet, NodeSet>                  delta;
  std::map<NodeSet, std::optional<Rational>> sw;
  for (auto const &s : all)
  {
    if (s.empty())
    {
      delta[s] = {};
      sw[s]    = Rational{0};
      continue;
    }
    std::optional<NodeSet> best_pred;
    for (auto const &drop : s)
    {
      NodeSet pred = s;
      pred.erase(drop);
      if (!best_pred || welfare_less(sw[*best_pred], sw[pred]) ||
          (sw[*best_pred] == sw[pred] &&
           std::lexicographical_compare(pred.begin(), pred.end(), best_pred->begin(), best_pred->end())))
      {
        best_pred = pred;
      }
    }
    delta[s] = delta[*best_pred];
    sw[s]    = sw[*best_pred];
    auto own = welfare_of(instance, profile, s);
    if (own && !welfare_less(own, sw[s]))
    {
      delta[s] = s;
      sw[s]    = own;
    }
  }
  return delta;
}

/// Small random connected instance with positive integer costs.
inline Instance random_instance(std::mt19937_64 &rng, std::size_t agents, std::size_t max_edges,
                                std::int64_t max_cost = 5, std::int64_t max_value = 8)
{
  for (;;)
  {
    std::vector<NodeId> names;
    for (std::size_t i = 0; i < agents; ++i)
    {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::vector<NodeId> nodes = names;
    nodes.push_back("s");
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
      {
        pairs.emplace_back(nodes[i], nodes[j]);
      }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min(pairs.size(), max_edges));
    std::vector<Edge> edges;
    for (auto const &[u, v] : pairs)
    {
      edges.push_back({EdgeKey(u, v), Rational{1 + static_cast<std::int64_t>(rng() % max_cost)}});
    }
    std::map<NodeId, Rational> values;
    for (auto const &name : names)
    {
      values[name] = Rational{static_cast<std::int64_t>(rng() % (max_value + 1))};
    }
    if (WeightedGraph("s", nodes, edges).connected())
    {
      return make_instance("s", names, edges, values);
    }
  }
}

}  // namespace netshare::oracle
