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

#include "netshare/cvm.hpp"

namespace netshare {

Rational critical_value(ReportedGame const &game, AgentMask selected, std::size_t agent,
                        std::size_t agent_cap, CriticalValueGround ground)
{
  AgentMask const bit = AgentMask{1} << agent;
  if ((selected & bit) == 0)
  {
    throw InputError("critical value requested for unselected agent '" + game.agents().at(agent) + "'");
  }
  AgentMask const others = selected & ~bit;
  auto const      cost   = game.cost(selected);
  if (!cost)
  {
    throw std::logic_error("selected set is not connectable");
  }
  AgentMask const pool = ground == CriticalValueGround::all_others ? game.all() & ~bit : others;
  WelfareTable const without = compute_delta_table(game, pool, agent_cap);
  return without.sw_delta(pool) - (game.reported_value(others) - *cost);
}

Rational critical_value(Instance const &instance, ReportProfile const &profile,
                        WelfareTable const &table, NodeId const &agent)
{
  ReportedGame const game(instance, profile);
  AgentMask const    selected = table.delta(table.ground());
  AgentMask const    bit      = game.mask_of({agent});
  if ((selected & bit) == 0)
  {
    throw InputError("agent '" + agent + "' is not selected");
  }
  return critical_value(game, selected, static_cast<std::size_t>(std::countr_zero(bit)),
                        static_cast<std::size_t>(cardinality(table.ground())));
}

Allocation run_cvm(Instance const &instance, ReportProfile const &profile,
                   MechanismOptions const &options)
{
  if (instance.agents.size() > options.agent_cap)
  {
    throw SizeCapError("instance has " + std::to_string(instance.agents.size()) +
                       " agents; cap is " + std::to_string(options.agent_cap));
  }
  ReportedGame const game(instance, profile, options.cache);
  WelfareTable const table    = compute_delta_table(game, game.all(), options.agent_cap);
  AgentMask const    selected = table.delta(game.all());

  Allocation out;
  out.selected       = game.set_of(selected);
  out.social_welfare = table.sw_delta(game.all());
  out.total_cost     = game.cost(selected).value_or(Rational{0});

  for (AgentMask rest = selected; rest != 0; rest &= rest - 1)
  {
    auto const agent = static_cast<std::size_t>(std::countr_zero(rest));
    out.shares[game.agents()[agent]] = critical_value(game, selected, agent, options.agent_cap,
                                                      options.cv_ground);
  }

  if (options.build_tree && selected != 0)
  {
    NodeSet terminals = out.selected;
    terminals.insert(instance.source());
    auto tree = steiner_cost(game.graph(), terminals);
    if (!tree || tree->cost != out.total_cost)
    {
      throw std::logic_error("Steiner witness disagrees with subset cost table");
    }
    out.tree_edges = std::move(tree->tree_edges);
  }
  settle_utilities(instance, out);
  return out;
}

}  // namespace netshare
