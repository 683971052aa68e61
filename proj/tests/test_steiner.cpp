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

#include "netshare/fixtures.hpp"
#include "netshare/steiner.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace netshare {
namespace {

using oracle::R;

TEST(Steiner, TriangleCosts)
{
  WeightedGraph const g = fixtures::triangle().graph;
  EXPECT_EQ(steiner_cost(g, {"s", "b"})->cost, R(4));
  EXPECT_EQ(steiner_cost(g, {"s", "a"})->cost, R(2));
  auto const all = steiner_cost(g, {"s", "a", "b"});
  ASSERT_TRUE(all.has_value());
  EXPECT_EQ(all->cost, R(5));
  EXPECT_EQ(all->tree_edges, (std::set<EdgeKey>{EdgeKey("s", "a"), EdgeKey("a", "b")}));
}

TEST(Steiner, TrivialTerminalSets)
{
  WeightedGraph const g = fixtures::triangle().graph;
  EXPECT_EQ(steiner_cost(g, {})->cost, R(0));
  EXPECT_EQ(steiner_cost(g, {"a"})->cost, R(0));
  EXPECT_TRUE(steiner_cost(g, {"a"})->tree_edges.empty());
}

TEST(Steiner, DisconnectedTerminalsAreInfeasible)
{
  WeightedGraph const g("s", {"s", "a", "b"}, {{EdgeKey("s", "a"), R(1)}});
  EXPECT_FALSE(steiner_cost(g, {"s", "b"}).has_value());
  EXPECT_FALSE(brute_force_steiner_oracle(g, {"s", "b"}).has_value());
  EXPECT_THROW(steiner_cost(g, {"s", "zz"}), InputError);
}

TEST(Steiner, UsesSteinerPoints)
{
  // Star through hub h is cheaper than any tree on the terminals alone.
  WeightedGraph const g("s", {"s", "a", "b", "h"},
                        {{EdgeKey("s", "h"), R(1)}, {EdgeKey("a", "h"), R(1)}, {EdgeKey("b", "h"), R(1)},
                         {EdgeKey("s", "a"), R(3)}, {EdgeKey("s", "b"), R(3)}, {EdgeKey("a", "b"), R(3)}});
  auto const result = steiner_cost(g, {"s", "a", "b"});
  EXPECT_EQ(result->cost, R(3));
  EXPECT_EQ(result->tree_edges,
            (std::set<EdgeKey>{EdgeKey("s", "h"), EdgeKey("a", "h"), EdgeKey("b", "h")}));
}

TEST(Steiner, FractionalCostsStayExact)
{
  WeightedGraph const g("s", {"s", "a", "b"},
                        {{EdgeKey("s", "a"), R(1, 3)}, {EdgeKey("a", "b"), R(1, 6)}, {EdgeKey("s", "b"), R(1, 2)}});
  EXPECT_EQ(steiner_cost(g, {"s", "a", "b"})->cost, R(1, 2));
  EXPECT_EQ(steiner_cost(g, {"s", "b"})->cost, R(1, 2));
}

TEST(Steiner, EqualCostTreesPickLexSmallestEdgeList)
{
  // Square s-a-b-c-s with unit costs: three of four edges form each optimum.
  WeightedGraph const g("s", {"s", "a", "b", "c"},
                        {{EdgeKey("s", "a"), R(1)}, {EdgeKey("a", "b"), R(1)}, {EdgeKey("b", "c"), R(1)},
                         {EdgeKey("c", "s"), R(1)}});
  auto const result = steiner_cost(g, {"s", "a", "b", "c"});
  EXPECT_EQ(result->tree_edges,
            (std::set<EdgeKey>{EdgeKey("a", "b"), EdgeKey("a", "s"), EdgeKey("b", "c")}));
}

// Every minimum tree, by edge subset enumeration; returns the lex-smallest.
std::set<EdgeKey> lex_min_tree(WeightedGraph const &g, NodeSet const &terminals, Rational const &optimum)
{
  auto const &edges = g.edges();
  std::optional<std::vector<EdgeKey>> best;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << edges.size()); ++mask)
  {
    std::vector<Edge> chosen;
    Rational          cost{0};
    NodeSet           nodes;
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
      if ((mask >> e) & 1U)
      {
        chosen.push_back(edges[e]);
        cost += edges[e].cost;
        nodes.insert(edges[e].key.u);
        nodes.insert(edges[e].key.v);
      }
    }
    if (cost != optimum || chosen.size() + 1 != nodes.size() ||
        !std::includes(nodes.begin(), nodes.end(), terminals.begin(), terminals.end()))
    {
      continue;
    }
    WeightedGraph const sub(*nodes.begin(), {nodes.begin(), nodes.end()}, chosen);
    if (!sub.connected())
    {
      continue;
    }
    std::vector<EdgeKey> keys;
    for (auto const &e : chosen)
    {
      keys.push_back(e.key);
    }
    if (!best || keys < *best)
    {
      best = keys;
    }
  }
  return best ? std::set<EdgeKey>(best->begin(), best->end()) : std::set<EdgeKey>{};
}

TEST(Steiner, MatchesEdgeSubsetOracleOnRandomGraphs)
{
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round)
  {
    Instance const       instance = oracle::random_instance(rng, 2 + round % 4, 9, 4);
    WeightedGraph const &g        = instance.graph;
    for (auto terminals : oracle::subsets_of({g.nodes().begin(), g.nodes().end()}))
    {
      auto const fast   = steiner_cost(g, terminals);
      auto const slow   = oracle::edge_subset_steiner(g, terminals);
      auto const brute  = brute_force_steiner_oracle(g, terminals);
      ASSERT_EQ(fast.has_value(), slow.has_value());
      ASSERT_EQ(brute.has_value(), slow.has_value());
      if (!slow)
      {
        continue;
      }
      ASSERT_EQ(fast->cost, *slow) << g.fingerprint();
      ASSERT_EQ(brute->cost, *slow) << g.fingerprint();
      ASSERT_EQ(g.total_cost(fast->tree_edges), fast->cost);
      if (terminals.size() > 1)
      {
        ASSERT_EQ(fast->tree_edges, lex_min_tree(g, terminals, *slow)) << g.fingerprint();
      }
    }
  }
}

TEST(Steiner, SubsetTableAgreesWithDirectSolves)
{
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round)
  {
    Instance const instance = oracle::random_instance(rng, 4, 8);
    SubsetCostTable const table(instance.graph, instance.agents);
    for (std::uint32_t mask = 0; mask < 16; ++mask)
    {
      NodeSet terminals{"s"};
      for (std::size_t i = 0; i < 4; ++i)
      {
        if ((mask >> i) & 1U)
        {
          terminals.insert(instance.agents[i]);
        }
      }
      auto const direct = steiner_cost(instance.graph, terminals);
      auto const cached = table.cost(mask);
      ASSERT_EQ(direct.has_value(), cached.has_value());
      if (direct)
      {
        EXPECT_EQ(direct->cost, *cached);
      }
    }
  }
}

TEST(Steiner, CacheReusesTables)
{
  SteinerCache   cache;
  Instance const instance = fixtures::triangle();
  auto const     first    = cache.table(instance.graph, instance.agents);
  auto const     second   = cache.table(instance.graph, instance.agents);
  EXPECT_EQ(first, second);
  EXPECT_EQ(cache.size(), 1u);
  cache.table(fixtures::line_deficit().graph, instance.agents);
  EXPECT_EQ(cache.size(), 2u);
}

TEST(Steiner, ContractionKeepsCheapestAttachment)
{
  Instance const        instance   = fixtures::triangle();
  ContractedGraph const contracted = contract_into_source(instance.graph, {"s", "a"});
  EXPECT_EQ(contracted.graph.nodes(), (std::vector<NodeId>{"b", "s"}));
  ASSERT_EQ(contracted.graph.edges().size(), 1u);
  EXPECT_EQ(contracted.graph.edges()[0].cost, R(3));
  EXPECT_EQ(contracted.expand({EdgeKey("b", "s")}), std::set<EdgeKey>{EdgeKey("a", "b")});
  EXPECT_THROW(contract_into_source(instance.graph, {"a"}), InputError);
}

TEST(Steiner, OracleRefusesLargeGraphs)
{
  std::vector<NodeId> nodes{"s"};
  std::vector<Edge>   edges;
  for (int i = 0; i < 13; ++i)
  {
    nodes.push_back("n" + std::to_string(i));
    edges.push_back({EdgeKey("s", nodes.back()), R(1)});
  }
  WeightedGraph const g("s", nodes, edges);
  EXPECT_THROW(brute_force_steiner_oracle(g, {"s", "n1"}), SizeCapError);
  EXPECT_EQ(steiner_cost(g, {"s", "n1", "n2"})->cost, R(2));
}

}  // namespace
}  // namespace netshare
