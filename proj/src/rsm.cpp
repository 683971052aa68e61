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

#include "netshare/rsm.hpp"

#include <algorithm>
#include <vector>

namespace netshare {
namespace {

/// Labels under which `agents` appear in `contracted`; merged agents map to the source.
std::vector<NodeId> contracted_labels(WeightedGraph const &contracted, std::vector<NodeId> const &agents)
{
  std::vector<NodeId> out;
  out.reserve(agents.size());
  for (auto const &agent : agents)
  {
    out.push_back(contracted.contains(agent) ? agent : contracted.source());
  }
  return out;
}

}  // namespace

std::optional<StageChoice> stage_solve(WeightedGraph const              &contracted,
                                       NodeSet const                    &remaining,
                                       std::map<NodeId, Rational> const &reported_values,
                                       Rational const                   &previous_share)
{
  std::vector<NodeId> const agents(remaining.begin(), remaining.end());
  std::vector<Rational>     values;
  for (auto const &agent : agents)
  {
    auto it = reported_values.find(agent);
    if (it == reported_values.end())
    {
      throw InputError("no reported valuation for '" + agent + "'");
    }
    values.push_back(it->second);
  }

  SubsetCostTable const costs(contracted, contracted_labels(contracted, agents));

  std::optional<AgentMask> best;
  Rational                 best_share;
  AgentMask const          full = static_cast<AgentMask>((std::uint64_t{1} << agents.size()) - 1);
  for (AgentMask subset = 1; subset <= full && subset != 0; ++subset)
  {
    auto const cost = costs.cost(subset);
    if (!cost)
    {
      continue;
    }
    Rational const share = *cost / Rational{cardinality(subset)};
    if (share < previous_share)
    {
      continue;
    }
    bool affordable = true;
    for (AgentMask rest = subset; rest != 0 && affordable; rest &= rest - 1)
    {
      affordable = values[static_cast<std::size_t>(std::countr_zero(rest))] >= share;
    }
    if (!affordable)
    {
      continue;
    }
    bool better = !best || share < best_share;
    if (best && share == best_share)
    {
      better = cardinality(subset) != cardinality(*best) ? cardinality(subset) > cardinality(*best)
                                                         : lex_less(subset, *best);
    }
    if (better)
    {
      best       = subset;
      best_share = share;
    }
  }

  if (!best)
  {
    return std::nullopt;
  }
  StageChoice choice{{}, best_share};
  for (AgentMask rest = *best; rest != 0; rest &= rest - 1)
  {
    choice.selected.insert(agents[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return choice;
}

Allocation run_rsm(Instance const &instance, ReportProfile const &profile,
                   MechanismOptions const &options)
{
  if (instance.agents.size() > options.agent_cap)
  {
    throw SizeCapError("instance has " + std::to_string(instance.agents.size()) +
                       " agents; cap is " + std::to_string(options.agent_cap));
  }
  WeightedGraph const induced = induced_graph(instance, profile);

  std::map<NodeId, Rational> reported;
  for (auto const &agent : instance.agents)
  {
    reported[agent] = profile.at(agent).valuation;
  }

  Allocation out;
  out.total_cost = Rational{0};
  out.stage_trace.emplace();

  NodeSet  remaining(instance.agents.begin(), instance.agents.end());
  NodeSet  merged{instance.source()};
  Rational previous{0};

  for (int stage = 1; !remaining.empty(); ++stage)
  {
    ContractedGraph const contracted = contract_into_source(induced, merged);
    auto choice = stage_solve(contracted.graph, remaining, reported, previous);
    if (!choice)
    {
      break;
    }

    NodeSet terminals{instance.source()};
    for (auto const &agent : choice->selected)
    {
      terminals.insert(contracted.graph.contains(agent) ? agent : instance.source());
    }
    auto tree = steiner_cost(contracted.graph, terminals);
    if (!tree)
    {
      throw std::logic_error("stage selection is not connectable");
    }

    StageRecord record;
    record.stage      = stage;
    record.selected   = choice->selected;
    record.share      = choice->share;
    record.stage_cost = tree->cost;
    record.edges      = contracted.expand(tree->tree_edges);
    for (auto const &key : record.edges)
    {
      for (auto const &end : {key.u, key.v})
      {
        if (merged.count(end) == 0 && choice->selected.count(end) == 0)
        {
          record.steiner_points.insert(end);
        }
      }
    }

    for (auto const &agent : choice->selected)
    {
      remaining.erase(agent);
      out.selected.insert(agent);
      out.shares[agent] = choice->share;
      merged.insert(agent);
    }
    for (auto it = remaining.begin(); it != remaining.end();)
    {
      if (reported.at(*it) < choice->share)
      {
        record.excluded.insert(*it);
        it = remaining.erase(it);
      }
      else
      {
        ++it;
      }
    }
    if (options.contraction == RsmContraction::purchased_tree)
    {
      merged.insert(record.steiner_points.begin(), record.steiner_points.end());
    }
    record.remaining = remaining;

    for (auto const &key : record.edges)
    {
      if (out.tree_edges.insert(key).second)
      {
        out.total_cost += *induced.cost(key);
      }
    }
    previous = choice->share;
    out.stage_trace->push_back(std::move(record));
  }

  SubsetCostTable const costs(induced, instance.agents);
  AgentMask             mask = 0;
  Rational              value{0};
  for (std::size_t i = 0; i < instance.agents.size(); ++i)
  {
    if (out.selected.count(instance.agents[i]) > 0)
    {
      mask |= AgentMask{1} << i;
      value += reported.at(instance.agents[i]);
    }
  }
  out.social_welfare = value - costs.cost(mask).value_or(Rational{0});
  settle_utilities(instance, out);
  return out;
}

}  // namespace netshare
