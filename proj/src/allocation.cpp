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

#include "netshare/allocation.hpp"

#include "netshare/bird.hpp"
#include "netshare/cvm.hpp"
#include "netshare/rsm.hpp"

#include <nlohmann/json.hpp>

namespace netshare {

Rational Allocation::total_shares() const
{
  Rational total{0};
  for (auto const &[agent, share] : shares)
  {
    total += share;
  }
  return total;
}

Rational Allocation::share(NodeId const &agent) const
{
  auto it = shares.find(agent);
  return it == shares.end() ? Rational{0} : it->second;
}

Rational Allocation::utility(NodeId const &agent) const
{
  auto it = utilities.find(agent);
  return it == utilities.end() ? Rational{0} : it->second;
}

std::string_view to_string(Mechanism mechanism)
{
  switch (mechanism)
  {
  case Mechanism::cvm:
    return "cvm";
  case Mechanism::rsm:
    return "rsm";
  case Mechanism::bird:
    return "bird";
  }
  return "unknown";
}

Mechanism parse_mechanism(std::string_view name)
{
  if (name == "cvm")
  {
    return Mechanism::cvm;
  }
  if (name == "rsm")
  {
    return Mechanism::rsm;
  }
  if (name == "bird")
  {
    return Mechanism::bird;
  }
  throw InputError("unknown mechanism '" + std::string(name) + "'");
}

Allocation run_mechanism(Mechanism mechanism, Instance const &instance,
                         ReportProfile const &profile, MechanismOptions const &options)
{
  switch (mechanism)
  {
  case Mechanism::cvm:
    return run_cvm(instance, profile, options);
  case Mechanism::rsm:
    return run_rsm(instance, profile, options);
  case Mechanism::bird:
    return run_bird(instance, profile);
  }
  throw InputError("unknown mechanism");
}

void settle_utilities(Instance const &instance, Allocation &allocation)
{
  for (auto const &agent : instance.agents)
  {
    if (allocation.selected.count(agent) > 0)
    {
      allocation.utilities[agent] = instance.valuations.at(agent) - allocation.share(agent);
    }
    else
    {
      allocation.shares[agent]    = Rational{0};
      allocation.utilities[agent] = Rational{0};
    }
  }
}

namespace {

using nlohmann::json;

json value_json(Rational const &value)
{
  if (value.denominator() == 1)
  {
    return value.numerator();
  }
  return to_string(value);
}

json edges_json(std::set<EdgeKey> const &edges)
{
  json out = json::array();
  for (auto const &key : edges)
  {
    out.push_back({key.u, key.v});
  }
  return out;
}

json map_json(std::map<NodeId, Rational> const &values)
{
  json out = json::object();
  for (auto const &[label, value] : values)
  {
    out[label] = value_json(value);
  }
  return out;
}

}  // namespace

std::string allocation_to_json(Allocation const &allocation, Mechanism mechanism, bool with_trace)
{
  json doc;
  doc["mechanism"]      = std::string(to_string(mechanism));
  doc["selected"]       = allocation.selected;
  doc["edges"]          = edges_json(allocation.tree_edges);
  doc["shares"]         = map_json(allocation.shares);
  doc["utilities"]      = map_json(allocation.utilities);
  doc["social_welfare"] = value_json(allocation.social_welfare);
  doc["total_cost"]     = value_json(allocation.total_cost);
  doc["total_shares"]   = value_json(allocation.total_shares());
  if (allocation.stage_trace)
  {
    doc["stage_count"] = allocation.stage_trace->size();
  }
  if (with_trace && allocation.stage_trace)
  {
    json stages = json::array();
    for (auto const &rec : *allocation.stage_trace)
    {
      stages.push_back({{"stage", rec.stage},
                        {"selected", rec.selected},
                        {"share", value_json(rec.share)},
                        {"stage_cost", value_json(rec.stage_cost)},
                        {"excluded", rec.excluded},
                        {"edges", edges_json(rec.edges)},
                        {"remaining", rec.remaining},
                        {"steiner_points", rec.steiner_points}});
    }
    doc["stages"] = std::move(stages);
  }
  return doc.dump(2) + "\n";
}

}  // namespace netshare
