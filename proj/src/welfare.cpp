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

#include "netshare/welfare.hpp"

#include <algorithm>

namespace netshare {

ReportedGame::ReportedGame(Instance const &instance, ReportProfile const &profile,
                           SteinerCache *cache)
  : agents_(instance.agents)
  , graph_(induced_graph(instance, profile))
{
  if (agents_.size() > SubsetCostTable::kMaxUniverse)
  {
    throw SizeCapError("too many agents for exact subset enumeration");
  }
  values_.reserve(agents_.size());
  for (auto const &agent : agents_)
  {
    values_.push_back(profile.at(agent).valuation);
  }
  costs_ = cache != nullptr ? cache->table(graph_, agents_)
                            : std::make_shared<SubsetCostTable const>(graph_, agents_);
}

Rational ReportedGame::reported_value(AgentMask subset) const
{
  Rational total{0};
  for (; subset != 0; subset &= subset - 1)
  {
    total += values_[static_cast<std::size_t>(std::countr_zero(subset))];
  }
  return total;
}

std::optional<Rational> ReportedGame::welfare(AgentMask subset) const
{
  auto c = cost(subset);
  if (!c)
  {
    return std::nullopt;
  }
  return reported_value(subset) - *c;
}

AgentMask ReportedGame::mask_of(NodeSet const &nodes) const
{
  AgentMask mask = 0;
  for (auto const &node : nodes)
  {
    auto it = std::lower_bound(agents_.begin(), agents_.end(), node);
    if (it == agents_.end() || *it != node)
    {
      throw InputError("'" + node + "' is not an agent");
    }
    mask |= AgentMask{1} << (it - agents_.begin());
  }
  return mask;
}

NodeSet ReportedGame::set_of(AgentMask subset) const
{
  NodeSet out;
  for (; subset != 0; subset &= subset - 1)
  {
    out.insert(agents_[static_cast<std::size_t>(std::countr_zero(subset))]);
  }
  return out;
}

WelfareTable::WelfareTable(std::vector<NodeId> agents, AgentMask ground)
  : agents_(std::move(agents))
  , ground_(ground)
  , delta_(std::size_t{1} << agents_.size(), 0)
  , sw_(std::size_t{1} << agents_.size(), Rational{0})
{}

bool WelfareTable::covers(AgentMask subset) const
{
  return (subset & ~ground_) == 0;
}

AgentMask WelfareTable::delta(AgentMask subset) const
{
  if (!covers(subset))
  {
    throw InputError("subset is not inside the welfare table's ground set");
  }
  return delta_[subset];
}

Rational WelfareTable::sw_delta(AgentMask subset) const
{
  if (!covers(subset))
  {
    throw InputError("subset is not inside the welfare table's ground set");
  }
  return sw_[subset];
}

void WelfareTable::set(AgentMask subset, AgentMask best, Rational welfare)
{
  delta_[subset] = best;
  sw_[subset]    = welfare;
}

std::optional<Rational> social_welfare(Instance const &instance, ReportProfile const &profile,
                                       NodeSet const &subset)
{
  ReportedGame game(instance, profile);
  return game.welfare(game.mask_of(subset));
}

WelfareTable compute_delta_table(ReportedGame const &game, AgentMask ground, std::size_t agent_cap)
{
  if (static_cast<std::size_t>(cardinality(ground)) > agent_cap)
  {
    throw SizeCapError("welfare table over " + std::to_string(cardinality(ground)) +
                       " agents exceeds the cap of " + std::to_string(agent_cap));
  }
  if (!WelfareTable(game.agents(), game.all()).covers(ground))
  {
    throw InputError("ground set contains non-agents");
  }

  std::vector<AgentMask> order;
  for (AgentMask sub = ground;; sub = (sub - 1) & ground)
  {
    order.push_back(sub);
    if (sub == 0)
    {
      break;
    }
  }
  std::stable_sort(order.begin(), order.end(), [](AgentMask a, AgentMask b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : a < b;
  });

  WelfareTable table(game.agents(), ground);
  table.set(0, 0, Rational{0});
  for (AgentMask subset : order)
  {
    if (subset == 0)
    {
      continue;
    }
    AgentMask best_pred = 0;
    bool      have      = false;
    for (AgentMask rest = subset; rest != 0; rest &= rest - 1)
    {
      AgentMask const pred = subset & ~(rest & (~rest + 1));
      if (!have || table.sw_delta(pred) > table.sw_delta(best_pred) ||
          (table.sw_delta(pred) == table.sw_delta(best_pred) && lex_less(pred, best_pred)))
      {
        best_pred = pred;
        have      = true;
      }
    }
    AgentMask chosen = table.delta(best_pred);
    Rational  value  = table.sw_delta(best_pred);
    if (auto own = game.welfare(subset); own && *own >= value)
    {
      chosen = subset;
      value  = *own;
    }
    table.set(subset, chosen, value);
  }
  return table;
}

WelfareTable compute_delta_table(Instance const &instance, ReportProfile const &profile,
                                 std::size_t agent_cap)
{
  if (instance.agents.size() > agent_cap)
  {
    throw SizeCapError("instance has " + std::to_string(instance.agents.size()) +
                       " agents; cap is " + std::to_string(agent_cap));
  }
  ReportedGame game(instance, profile);
  return compute_delta_table(game, game.all(), agent_cap);
}

NodeSet delta(WelfareTable const &table, NodeSet const &subset)
{
  AgentMask mask = 0;
  auto const &agents = table.agents();
  for (auto const &node : subset)
  {
    auto it = std::lower_bound(agents.begin(), agents.end(), node);
    if (it == agents.end() || *it != node)
    {
      throw InputError("'" + node + "' is not an agent");
    }
    mask |= AgentMask{1} << (it - agents.begin());
  }
  NodeSet out;
  for (AgentMask d = table.delta(mask); d != 0; d &= d - 1)
  {
    out.insert(agents[static_cast<std::size_t>(std::countr_zero(d))]);
  }
  return out;
}

}  // namespace netshare
