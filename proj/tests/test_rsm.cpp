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
#include "netshare/rsm.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace netshare {
namespace {

using oracle::R;

Allocation truthful_rsm(Instance const &instance, MechanismOptions const &options = {})
{
  return run_rsm(instance, truthful_profile(instance), options);
}

TEST(Rsm, LineTrace)
{
  Allocation const result = truthful_rsm(fixtures::line_deficit());
  ASSERT_TRUE(result.stage_trace.has_value());
  auto const &trace = *result.stage_trace;
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[0].selected, NodeSet{"a"});
  EXPECT_EQ(trace[0].share, R(2));
  EXPECT_EQ(trace[1].selected, NodeSet{"b"});
  EXPECT_EQ(trace[1].share, R(3));
  EXPECT_EQ(result.total_shares(), R(5));
  EXPECT_EQ(result.total_cost, R(5));
}

TEST(Rsm, FirstStageOnLine)
{
  Instance const instance = fixtures::line_deficit();
  auto const     choice   = stage_solve(instance.graph, {"a", "b"}, instance.valuations, R(0));
  ASSERT_TRUE(choice.has_value());
  EXPECT_EQ(choice->selected, NodeSet{"a"});
  EXPECT_EQ(choice->share, R(2));
}

TEST(Rsm, StageRespectsPreviousShareAndValuations)
{
  Instance const instance = fixtures::line_deficit();
  // {a} at 2 is below the floor of 5/2, so the pair at 5/2 wins.
  auto const choice = stage_solve(instance.graph, {"a", "b"}, instance.valuations, R(5, 2));
  ASSERT_TRUE(choice.has_value());
  EXPECT_EQ(choice->selected, (NodeSet{"a", "b"}));
  EXPECT_EQ(choice->share, R(5, 2));
  // Nobody can afford anything.
  std::map<NodeId, Rational> poor{{"a", R(1)}, {"b", R(1)}};
  EXPECT_FALSE(stage_solve(instance.graph, {"a", "b"}, poor, R(0)).has_value());
}

TEST(Rsm, TiesPreferLargerSets)
{
  // a and b both at cost 2 from s: {a}, {b}, {a,b} all average 2.
  Instance const instance = make_instance("s", {"a", "b"}, {{EdgeKey("s", "a"), R(2)}, {EdgeKey("s", "b"), R(2)}},
                                          {{"a", R(5)}, {"b", R(5)}});
  auto const choice = stage_solve(instance.graph, {"a", "b"}, instance.valuations, R(0));
  EXPECT_EQ(choice->selected, (NodeSet{"a", "b"}));
}

TEST(Rsm, StagedPurchaseTrace)
{
  Allocation const result = truthful_rsm(fixtures::staged_purchase());
  auto const      &trace  = *result.stage_trace;
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace[0].selected, NodeSet{"b"});
  EXPECT_EQ(trace[0].share, R(3));
  EXPECT_EQ(trace[0].excluded, NodeSet{"f"});
  EXPECT_EQ(trace[1].selected, NodeSet{"a"});
  EXPECT_EQ(trace[1].share, R(4));
  EXPECT_EQ(trace[2].selected, (NodeSet{"c", "d", "e"}));
  EXPECT_EQ(trace[2].share, R(5));
  EXPECT_EQ(trace[2].edges, (std::set<EdgeKey>{EdgeKey("a", "d"), EdgeKey("c", "d"), EdgeKey("b", "e")}));
  EXPECT_EQ(result.selected, (NodeSet{"a", "b", "c", "d", "e"}));
  EXPECT_EQ(result.share("f"), R(0));
  EXPECT_EQ(result.total_shares(), R(22));
  EXPECT_EQ(result.total_cost, R(22));
}

TEST(Rsm, PurchasedSteinerPointsBecomeFree)
{
  Instance const   instance = fixtures::contraction_overcharge();
  Allocation const result   = truthful_rsm(instance);
  EXPECT_EQ(result.selected, (NodeSet{"j", "x"}));
  EXPECT_EQ(result.share("j"), R(2));
  EXPECT_EQ(result.share("x"), R(3));
  EXPECT_EQ(result.total_shares(), result.total_cost);
  EXPECT_EQ((*result.stage_trace)[0].steiner_points, NodeSet{"i"});

  MechanismOptions literal;
  literal.contraction           = RsmContraction::selected_nodes;
  Allocation const overcharged  = truthful_rsm(instance, literal);
  EXPECT_EQ(overcharged.share("x"), R(4));
  EXPECT_EQ(overcharged.total_shares(), R(6));
  EXPECT_EQ(overcharged.total_cost, R(5));
}

TEST(Rsm, DropsCheapFreeRider)
{
  Allocation const result = truthful_rsm(fixtures::staged_inefficiency());
  EXPECT_EQ(result.selected, (NodeSet{"b", "c"}));
  EXPECT_EQ(result.social_welfare, R(5));
  EXPECT_EQ(result.share("d"), R(0));
}

TEST(Rsm, InvariantsOnRandomProfiles)
{
  std::mt19937_64 rng(77);
  for (int round = 0; round < 60; ++round)
  {
    Instance const instance = oracle::random_instance(rng, 2 + round % 4, 9);
    ReportProfile  profile  = truthful_profile(instance);
    for (auto const &agent : instance.agents)
    {
      for (auto const &key : instance.adjacent_edges(agent))
      {
        if (rng() % 5 == 0)
        {
          profile.reports[agent].edges.erase(key);
        }
      }
      profile.reports[agent].valuation = R(static_cast<std::int64_t>(rng() % 17), 2);
    }
    Allocation const result = run_rsm(instance, profile);
    ASSERT_EQ(result.total_shares(), result.total_cost);
    ASSERT_EQ(instance.graph.total_cost(result.tree_edges), result.total_cost);
    Rational previous{0};
    for (auto const &stage : *result.stage_trace)
    {
      EXPECT_GE(stage.share, previous);
      previous = stage.share;
      EXPECT_EQ(stage.stage_cost, stage.share * Rational{static_cast<std::int64_t>(stage.selected.size())});
    }
    for (auto const &agent : instance.agents)
    {
      EXPECT_GE(result.share(agent), R(0));
      EXPECT_LE(result.share(agent), profile.at(agent).valuation);
    }
    // Every selected agent is connected to the source by the purchased edges.
    std::vector<Edge> tree;
    for (auto const &key : result.tree_edges)
    {
      tree.push_back({key, *instance.graph.cost(key)});
    }
    NodeSet nodes{"s"};
    for (auto const &key : result.tree_edges)
    {
      nodes.insert(key.u);
      nodes.insert(key.v);
    }
    WeightedGraph const purchased("s", {nodes.begin(), nodes.end()}, tree);
    EXPECT_TRUE(purchased.connected());
    for (auto const &agent : result.selected)
    {
      EXPECT_TRUE(nodes.count(agent) > 0);
    }
  }
}

}  // namespace
}  // namespace netshare
