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

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace netshare {

/// Subset of a game's agents; bit i is agents()[i] (label order).
using AgentMask = std::uint32_t;

inline constexpr std::size_t kDefaultAgentCap = 12;

inline int cardinality(AgentMask mask)
{
  return std::popcount(mask);
}

/// Compares two subsets as sorted label lists (a proper prefix sorts first).
inline bool lex_less(AgentMask a, AgentMask b)
{
  while (a != 0 && b != 0)
  {
    int const la = std::countr_zero(a);
    int const lb = std::countr_zero(b);
    if (la != lb)
    {
      return la < lb;
    }
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// The graph induced by a report profile together with reported valuations
/// and C(S) for every subset of agents.
class ReportedGame
{
public:
  ReportedGame(Instance const &instance, ReportProfile const &profile,
               SteinerCache *cache = nullptr);

  std::vector<NodeId> const &agents() const
  {
    return agents_;
  }
  WeightedGraph const &graph() const
  {
    return graph_;
  }
  AgentMask all() const
  {
    return agents_.empty() ? 0 : static_cast<AgentMask>((std::uint64_t{1} << agents_.size()) - 1);
  }

  std::optional<Rational> cost(AgentMask subset) const
  {
    return costs_->cost(subset);
  }
  Rational reported_value(AgentMask subset) const;
  Rational reported_value(std::size_t agent) const
  {
    return values_[agent];
  }
  /// Sum of reported valuations minus C(S); nullopt when C(S) is infeasible.
  std::optional<Rational> welfare(AgentMask subset) const;

  AgentMask mask_of(NodeSet const &nodes) const;
  NodeSet   set_of(AgentMask subset) const;

private:
  std::vector<NodeId>                    agents_;
  std::vector<Rational>                  values_;
  WeightedGraph                          graph_;
  std::shared_ptr<SubsetCostTable const> costs_;
};

/// Result of the welfare dynamic program over a ground set: for each subset S
/// of the ground set, delta(S) is a welfare-maximizing subset of S.
class WelfareTable
{
public:
  WelfareTable(std::vector<NodeId> agents, AgentMask ground);

  AgentMask ground() const
  {
    return ground_;
  }
  std::vector<NodeId> const &agents() const
  {
    return agents_;
  }

  bool      covers(AgentMask subset) const;
  AgentMask delta(AgentMask subset) const;
  Rational  sw_delta(AgentMask subset) const;

  void set(AgentMask subset, AgentMask best, Rational welfare);

private:
  std::vector<NodeId>    agents_;
  AgentMask              ground_;
  std::vector<AgentMask> delta_;
  std::vector<Rational>  sw_;
};

/// SW(S) = sum of reported valuations in S minus C(S) on the induced graph.
std::optional<Rational> social_welfare(Instance const &instance, ReportProfile const &profile,
                                       NodeSet const &subset);

/// Bottom-up welfare maximization over all subsets of `ground`, in ascending
/// cardinality. delta(S) starts as the best delta over the subsets one smaller
/// (ties: lexicographically smallest predecessor) and becomes S itself when
/// SW(S) is at least that good. Infeasible subsets never win.
WelfareTable compute_delta_table(ReportedGame const &game, AgentMask ground,
                                 std::size_t agent_cap = kDefaultAgentCap);

WelfareTable compute_delta_table(Instance const &instance, ReportProfile const &profile,
                                 std::size_t agent_cap = kDefaultAgentCap);

/// delta(S) by label. Throws InputError when S is outside the table's ground set.
NodeSet delta(WelfareTable const &table, NodeSet const &subset);

}  // namespace netshare
