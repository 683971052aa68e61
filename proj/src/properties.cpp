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

#include "netshare/properties.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <random>

namespace netshare {
namespace {

using Rng = std::mt19937_64;

std::uint64_t draw(Rng &rng, std::uint64_t bound)
{
  return rng() % bound;
}

std::vector<Rational> valuation_grid(Instance const &instance, NodeId const &agent, Rational const &step)
{
  if (step <= 0)
  {
    throw InputError("grid step must be positive");
  }
  Rational vmax{0};
  for (auto const &[label, value] : instance.valuations)
  {
    vmax = std::max(vmax, value);
  }
  Rational const           truth = instance.valuations.at(agent);
  std::vector<Rational>    grid{truth};
  for (Rational v{0}; v <= vmax + 1; v += step)
  {
    if (v != truth)
    {
      grid.push_back(v);
    }
  }
  return grid;
}

AgentReport random_report(Instance const &instance, NodeId const &agent, std::vector<Rational> const &grid,
                          Rng &rng)
{
  AgentReport report;
  for (auto const &key : instance.adjacent_edges(agent))
  {
    if (draw(rng, 2) == 1)
    {
      report.edges.insert(key);
    }
  }
  report.valuation = grid[draw(rng, grid.size())];
  return report;
}

/// Truthful profile followed by `count` profiles where every agent reports at random.
std::vector<ReportProfile> sampled_profiles(Instance const &instance, CheckOptions const &options)
{
  Rng                        rng(options.seed);
  ReportProfile const        truthful = truthful_profile(instance);
  std::vector<ReportProfile> out{truthful};
  std::map<NodeId, std::vector<Rational>> grids;
  for (auto const &agent : instance.agents)
  {
    grids[agent] = valuation_grid(instance, agent, options.grid_step);
  }
  for (std::size_t s = 0; s < options.samples; ++s)
  {
    ReportProfile profile = truthful;
    for (auto const &agent : instance.agents)
    {
      profile.reports[agent] = random_report(instance, agent, grids[agent], rng);
    }
    out.push_back(std::move(profile));
  }
  return out;
}

PropertyReport make_report(std::string name, Mechanism mechanism, CheckOptions const &options)
{
  PropertyReport report;
  report.property          = std::move(name);
  report.mechanism         = mechanism;
  report.seed              = options.seed;
  report.instances_checked = 1;
  return report;
}

void violate(PropertyReport &report, Witness witness)
{
  report.verdict = Verdict::violated;
  if (!report.witness)
  {
    report.witness = std::move(witness);
  }
}

Witness base_witness(Instance const &instance, ReportProfile const &profile, std::string summary)
{
  Witness w{std::move(summary), instance, profile, {}, {}, {}, {}, {}, {}, {}};
  return w;
}

/// Per-profile predicate checks shared by feasibility, positiveness and budget balance.
template <typename Check>
PropertyReport check_profiles(std::string name, Instance const &instance, Mechanism mechanism,
                              CheckOptions const &options, Check check)
{
  PropertyReport report = make_report(std::move(name), mechanism, options);
  for (auto const &profile : sampled_profiles(instance, options))
  {
    Allocation const allocation = run_mechanism(mechanism, instance, profile, options.mechanism);
    ++report.cases_checked;
    if (auto witness = check(profile, allocation))
    {
      violate(report, std::move(*witness));
      break;
    }
  }
  return report;
}

Rational selection_welfare(Instance const &instance, ReportProfile const &profile, NodeSet const &selection)
{
  auto sw = social_welfare(instance, profile, selection);
  if (!sw)
  {
    throw InputError("selection cannot be connected to the source");
  }
  return *sw;
}

Rational cost_of(Instance const &instance, EdgeKey const &edge)
{
  auto c = instance.graph.cost(edge);
  if (!c)
  {
    throw InputError("unknown edge " + to_string(edge));
  }
  return *c;
}

}  // namespace

std::string_view to_string(Verdict verdict)
{
  return verdict == Verdict::holds ? "holds" : "violated";
}

DeviationSet DeviationSet::for_agent(Instance const &instance, NodeId const &agent, Rational const &step)
{
  if (!instance.is_agent(agent))
  {
    throw InputError("'" + agent + "' is not an agent");
  }
  auto const edges = instance.adjacent_edges(agent);
  if (edges.size() > 16)
  {
    throw SizeCapError("agent '" + agent + "' has too many edges to enumerate deviations");
  }
  auto const   grid = valuation_grid(instance, agent, step);
  DeviationSet out{agent, {}};
  std::uint32_t const full = (std::uint32_t{1} << edges.size()) - 1;
  // Full edge set first so that the truthful report leads.
  for (std::uint32_t keep = full + 1; keep-- > 0;)
  {
    std::set<EdgeKey> declared;
    for (std::size_t e = 0; e < edges.size(); ++e)
    {
      if ((keep >> e) & 1U)
      {
        declared.insert(edges[e]);
      }
    }
    for (auto const &value : grid)
    {
      out.reports.push_back({declared, value});
    }
  }
  return out;
}

PropertyReport check_truthfulness(Instance const &instance, Mechanism mechanism,
                                  std::vector<DeviationSet> const &deviations, CheckOptions const &options)
{
  PropertyReport      report   = make_report("truthfulness", mechanism, options);
  ReportProfile const truthful = truthful_profile(instance);
  Allocation const    honest   = run_mechanism(mechanism, instance, truthful, options.mechanism);
  ++report.cases_checked;

  std::optional<Rational> best_gain;
  for (auto const &set : deviations)
  {
    Rational const before = honest.utility(set.agent);
    for (auto const &deviation : set.reports)
    {
      if (deviation == truthful.at(set.agent))
      {
        continue;
      }
      ReportProfile const profile = apply_deviation(instance, truthful, set.agent, deviation);
      Rational const      after   = run_mechanism(mechanism, instance, profile, options.mechanism).utility(set.agent);
      ++report.cases_checked;
      if (after > before && (!best_gain || after - before > *best_gain))
      {
        best_gain   = after - before;
        Witness w   = base_witness(instance, profile, "agent '" + set.agent + "' gains by deviating");
        w.agent     = set.agent;
        w.deviation = deviation;
        w.before    = before;
        w.after     = after;
        report.verdict = Verdict::violated;
        report.witness = std::move(w);
      }
    }
  }
  return report;
}

PropertyReport check_truthfulness(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  std::vector<DeviationSet> sets;
  for (auto const &agent : instance.agents)
  {
    sets.push_back(DeviationSet::for_agent(instance, agent, options.grid_step));
  }
  return check_truthfulness(instance, mechanism, sets, options);
}

PropertyReport check_feasibility(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  return check_profiles("feasibility", instance, mechanism, options,
                        [&](ReportProfile const &profile, Allocation const &allocation) -> std::optional<Witness> {
                          for (auto const &agent : instance.agents)
                          {
                            if (allocation.share(agent) > profile.at(agent).valuation)
                            {
                              Witness w = base_witness(instance, profile, "share of '" + agent + "' exceeds its report");
                              w.agent   = agent;
                              w.before  = profile.at(agent).valuation;
                              w.after   = allocation.share(agent);
                              return w;
                            }
                          }
                          return std::nullopt;
                        });
}

PropertyReport check_positiveness(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  return check_profiles("positiveness", instance, mechanism, options,
                        [&](ReportProfile const &profile, Allocation const &allocation) -> std::optional<Witness> {
                          for (auto const &agent : instance.agents)
                          {
                            if (allocation.share(agent) < 0)
                            {
                              Witness w = base_witness(instance, profile, "negative share for '" + agent + "'");
                              w.agent   = agent;
                              w.after   = allocation.share(agent);
                              return w;
                            }
                          }
                          return std::nullopt;
                        });
}

PropertyReport check_budget_balance(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  return check_profiles("budget-balance", instance, mechanism, options,
                        [&](ReportProfile const &profile, Allocation const &allocation) -> std::optional<Witness> {
                          if (allocation.total_shares() != allocation.total_cost)
                          {
                            Witness w = base_witness(instance, profile, "shares do not cover the selected edges exactly");
                            w.before  = allocation.total_cost;
                            w.after   = allocation.total_shares();
                            return w;
                          }
                          return std::nullopt;
                        });
}

PropertyReport check_individual_rationality(Instance const &instance, Mechanism mechanism,
                                            CheckOptions const &options)
{
  PropertyReport      report   = make_report("individual-rationality", mechanism, options);
  ReportProfile const truthful = truthful_profile(instance);
  Rng                 rng(options.seed);
  std::map<NodeId, std::vector<Rational>> grids;
  for (auto const &agent : instance.agents)
  {
    grids[agent] = valuation_grid(instance, agent, options.grid_step);
  }

  for (auto const &agent : instance.agents)
  {
    for (std::size_t s = 0; s <= options.samples; ++s)
    {
      ReportProfile profile = truthful;
      if (s > 0)
      {
        for (auto const &other : instance.agents)
        {
          if (other != agent)
          {
            profile.reports[other] = random_report(instance, other, grids[other], rng);
          }
        }
      }
      Rational const u = run_mechanism(mechanism, instance, profile, options.mechanism).utility(agent);
      ++report.cases_checked;
      if (u < 0)
      {
        Witness w = base_witness(instance, profile, "truthful agent '" + agent + "' ends with negative utility");
        w.agent   = agent;
        w.after   = u;
        violate(report, std::move(w));
        return report;
      }
    }
  }
  return report;
}

Rational max_social_welfare(Instance const &instance, ReportProfile const &profile)
{
  if (instance.agents.size() > kEfficiencyAgentCap)
  {
    throw SizeCapError("brute-force welfare is limited to " + std::to_string(kEfficiencyAgentCap) + " agents");
  }
  ReportedGame const game(instance, profile);
  Rational           best{0};
  for (AgentMask subset = 1; subset <= game.all() && subset != 0; ++subset)
  {
    if (auto sw = game.welfare(subset); sw && *sw > best)
    {
      best = *sw;
    }
  }
  return best;
}

PropertyReport check_efficiency(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  if (instance.agents.size() > kEfficiencyAgentCap)
  {
    throw SizeCapError("efficiency check is limited to " + std::to_string(kEfficiencyAgentCap) + " agents");
  }
  return check_profiles("efficiency", instance, mechanism, options,
                        [&](ReportProfile const &profile, Allocation const &allocation) -> std::optional<Witness> {
                          Rational const achieved = selection_welfare(instance, profile, allocation.selected);
                          Rational const optimum  = max_social_welfare(instance, profile);
                          if (achieved != optimum)
                          {
                            Witness w = base_witness(instance, profile, "selected set does not maximize welfare");
                            w.before  = optimum;
                            w.after   = achieved;
                            return w;
                          }
                          return std::nullopt;
                        });
}

bool twin_premise(Instance const &instance, NodeId const &i, NodeId const &j, bool dominated)
{
  if (i == j || !instance.is_agent(i) || !instance.is_agent(j))
  {
    return false;
  }
  if (instance.valuations.at(i) != instance.valuations.at(j))
  {
    return false;
  }
  NodeSet ni = instance.graph.adjacent(i);
  NodeSet nj = instance.graph.adjacent(j);
  ni.erase(j);
  nj.erase(i);
  if (ni != nj)
  {
    return false;
  }
  for (auto const &k : ni)
  {
    Rational const ci = *instance.graph.cost(EdgeKey(i, k));
    Rational const cj = *instance.graph.cost(EdgeKey(j, k));
    if (dominated ? ci > cj : ci != cj)
    {
      return false;
    }
  }
  return true;
}

namespace {

PropertyReport pair_check(std::string name, Instance const &instance, Mechanism mechanism, NodeId const &i,
                          NodeId const &j, bool dominated, CheckOptions const &options)
{
  if (!twin_premise(instance, i, j, dominated))
  {
    throw HypothesisError("agents '" + i + "' and '" + j + "' do not satisfy the " + name + " premise");
  }
  PropertyReport      report   = make_report(std::move(name), mechanism, options);
  ReportProfile const truthful = truthful_profile(instance);
  Allocation const    result   = run_mechanism(mechanism, instance, truthful, options.mechanism);
  report.cases_checked         = 1;
  Rational const ui            = result.utility(i);
  Rational const uj            = result.utility(j);
  if (dominated ? ui < uj : ui != uj)
  {
    Witness w     = base_witness(instance, truthful, "utilities of '" + i + "' and '" + j + "' break the premise's conclusion");
    w.agent       = i;
    w.other_agent = j;
    w.before      = ui;
    w.after       = uj;
    violate(report, std::move(w));
  }
  return report;
}

PropertyReport pair_check_all(std::string name, Instance const &instance, Mechanism mechanism, bool dominated,
                              CheckOptions const &options)
{
  PropertyReport report = make_report(name, mechanism, options);
  for (auto const &i : instance.agents)
  {
    for (auto const &j : instance.agents)
    {
      if ((!dominated && !(i < j)) || !twin_premise(instance, i, j, dominated))
      {
        continue;
      }
      PropertyReport one = pair_check(name, instance, mechanism, i, j, dominated, options);
      report.cases_checked += one.cases_checked;
      if (!one.holds())
      {
        violate(report, std::move(*one.witness));
        return report;
      }
    }
  }
  return report;
}

}  // namespace

PropertyReport check_symmetry(Instance const &instance, Mechanism mechanism, NodeId const &i, NodeId const &j,
                              CheckOptions const &options)
{
  return pair_check("symmetry", instance, mechanism, i, j, false, options);
}

PropertyReport check_ranking(Instance const &instance, Mechanism mechanism, NodeId const &i, NodeId const &j,
                             CheckOptions const &options)
{
  return pair_check("ranking", instance, mechanism, i, j, true, options);
}

PropertyReport check_symmetry_all(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  return pair_check_all("symmetry", instance, mechanism, false, options);
}

PropertyReport check_ranking_all(Instance const &instance, Mechanism mechanism, CheckOptions const &options)
{
  return pair_check_all("ranking", instance, mechanism, true, options);
}

PropertyReport check_utility_monotonicity(Instance const &instance, Mechanism mechanism, EdgeKey const &edge,
                                          Rational const &delta, CheckOptions const &options)
{
  if (delta <= 0)
  {
    throw InputError("cost increase must be positive");
  }
  PropertyReport   report  = make_report("utility-monotonicity", mechanism, options);
  Instance const   raised  = with_edge_cost(instance, edge, cost_of(instance, edge) + delta);
  Allocation const before  = run_mechanism(mechanism, instance, truthful_profile(instance), options.mechanism);
  Allocation const after   = run_mechanism(mechanism, raised, truthful_profile(raised), options.mechanism);
  report.cases_checked     = 2;
  for (auto const &end : {edge.u, edge.v})
  {
    if (instance.is_agent(end) && after.utility(end) > before.utility(end))
    {
      Witness w    = base_witness(instance, truthful_profile(instance),
                                  "raising " + to_string(edge) + " raises the utility of '" + end + "'");
      w.agent      = end;
      w.edge       = edge;
      w.edge_delta = delta;
      w.before     = before.utility(end);
      w.after      = after.utility(end);
      violate(report, std::move(w));
      break;
    }
  }
  return report;
}

PropertyReport check_utility_monotonicity_all(Instance const &instance, Mechanism mechanism, Rational const &delta,
                                              CheckOptions const &options)
{
  PropertyReport report = make_report("utility-monotonicity", mechanism, options);
  for (auto const &edge : instance.graph.edges())
  {
    PropertyReport one = check_utility_monotonicity(instance, mechanism, edge.key, delta, options);
    report.cases_checked += one.cases_checked;
    if (!one.holds())
    {
      violate(report, std::move(*one.witness));
      break;
    }
  }
  return report;
}

std::optional<Rational> budget_balance_ratio(Instance const &instance, Mechanism mechanism,
                                             MechanismOptions const &options)
{
  Allocation const result = run_mechanism(mechanism, instance, truthful_profile(instance), options);
  if (result.selected.empty() || result.total_cost == Rational{0})
  {
    return std::nullopt;
  }
  return result.total_shares() / result.total_cost;
}

Rational welfare_ratio(Instance const &instance, ReportProfile const &profile, NodeSet const &selection)
{
  Rational const optimum = max_social_welfare(instance, profile);
  if (optimum <= 0)
  {
    throw InputError("welfare ratio needs a positive optimal welfare");
  }
  return selection_welfare(instance, profile, selection) / optimum;
}

Rational welfare_ratio(Instance const &instance, Mechanism mechanism, MechanismOptions const &options)
{
  ReportProfile const truthful = truthful_profile(instance);
  Allocation const    result   = run_mechanism(mechanism, instance, truthful, options);
  return welfare_ratio(instance, truthful, result.selected);
}

bool replay_witness(PropertyReport const &report, MechanismOptions const &options)
{
  if (report.holds() || !report.witness)
  {
    return false;
  }
  Witness const &w         = *report.witness;
  Mechanism const mechanism = report.mechanism;
  Allocation const rerun     = run_mechanism(mechanism, w.instance, w.profile, options);

  if (report.property == "truthfulness")
  {
    Allocation const honest = run_mechanism(mechanism, w.instance, truthful_profile(w.instance), options);
    return honest.utility(*w.agent) == *w.before && rerun.utility(*w.agent) == *w.after && *w.after > *w.before;
  }
  if (report.property == "feasibility")
  {
    return rerun.share(*w.agent) == *w.after && *w.after > w.profile.at(*w.agent).valuation;
  }
  if (report.property == "positiveness")
  {
    return rerun.share(*w.agent) < 0;
  }
  if (report.property == "budget-balance")
  {
    return rerun.total_shares() != rerun.total_cost && rerun.total_shares() == *w.after;
  }
  if (report.property == "individual-rationality")
  {
    return rerun.utility(*w.agent) < 0;
  }
  if (report.property == "efficiency")
  {
    return selection_welfare(w.instance, w.profile, rerun.selected) != max_social_welfare(w.instance, w.profile);
  }
  if (report.property == "symmetry")
  {
    return rerun.utility(*w.agent) != rerun.utility(*w.other_agent);
  }
  if (report.property == "ranking")
  {
    return rerun.utility(*w.agent) < rerun.utility(*w.other_agent);
  }
  if (report.property == "utility-monotonicity")
  {
    Instance const raised = with_edge_cost(w.instance, *w.edge, cost_of(w.instance, *w.edge) + *w.edge_delta);
    Allocation const after = run_mechanism(mechanism, raised, truthful_profile(raised), options);
    return after.utility(*w.agent) > rerun.utility(*w.agent);
  }
  if (report.property == "bbr")
  {
    return rerun.total_cost > 0 && rerun.total_shares() == Rational{0};
  }
  if (report.property == "welfare-ratio")
  {
    return welfare_ratio(w.instance, w.profile, rerun.selected) < 1;
  }
  return false;
}

std::vector<std::string> const &property_names()
{
  static std::vector<std::string> const names{
      "feasibility", "truthfulness", "individual-rationality", "utility-monotonicity", "budget-balance",
      "ranking",     "symmetry",     "positiveness",           "efficiency",           "bbr",
      "welfare-ratio"};
  return names;
}

PropertyReport run_property(std::string_view name, Instance const &instance, Mechanism mechanism,
                            CheckOptions const &options)
{
  if (name == "truthfulness")
  {
    return check_truthfulness(instance, mechanism, options);
  }
  if (name == "feasibility")
  {
    return check_feasibility(instance, mechanism, options);
  }
  if (name == "individual-rationality")
  {
    return check_individual_rationality(instance, mechanism, options);
  }
  if (name == "utility-monotonicity")
  {
    return check_utility_monotonicity_all(instance, mechanism, Rational{1}, options);
  }
  if (name == "budget-balance")
  {
    return check_budget_balance(instance, mechanism, options);
  }
  if (name == "ranking")
  {
    return check_ranking_all(instance, mechanism, options);
  }
  if (name == "symmetry")
  {
    return check_symmetry_all(instance, mechanism, options);
  }
  if (name == "positiveness")
  {
    return check_positiveness(instance, mechanism, options);
  }
  if (name == "efficiency")
  {
    return check_efficiency(instance, mechanism, options);
  }
  if (name == "bbr")
  {
    PropertyReport report = make_report("bbr", mechanism, options);
    report.cases_checked  = 1;
    report.value          = budget_balance_ratio(instance, mechanism, options.mechanism);
    if (report.value && *report.value == Rational{0})
    {
      Witness w = base_witness(instance, truthful_profile(instance), "shares cover none of a positive cost");
      w.after   = *report.value;
      violate(report, std::move(w));
    }
    return report;
  }
  if (name == "welfare-ratio")
  {
    PropertyReport report = make_report("welfare-ratio", mechanism, options);
    if (max_social_welfare(instance, truthful_profile(instance)) <= 0)
    {
      return report;
    }
    report.cases_checked = 1;
    report.value         = welfare_ratio(instance, mechanism, options.mechanism);
    if (*report.value < 1)
    {
      Witness w = base_witness(instance, truthful_profile(instance), "selection falls short of the optimal welfare");
      w.after   = *report.value;
      violate(report, std::move(w));
    }
    return report;
  }
  throw InputError("unknown property '" + std::string(name) + "'");
}

PropertyReport run_property(std::string_view name, std::vector<Instance> const &corpus, Mechanism mechanism,
                            CheckOptions const &options)
{
  PropertyReport merged    = make_report(std::string(name), mechanism, options);
  merged.instances_checked = 0;
  for (auto const &instance : corpus)
  {
    PropertyReport one = run_property(name, instance, mechanism, options);
    merged.instances_checked += one.instances_checked;
    merged.cases_checked += one.cases_checked;
    if (one.value && (!merged.value || *one.value < *merged.value))
    {
      merged.value = one.value;
    }
    if (!one.holds())
    {
      violate(merged, std::move(*one.witness));
    }
  }
  return merged;
}

namespace {

nlohmann::json value_json(Rational const &value)
{
  if (value.denominator() == 1)
  {
    return value.numerator();
  }
  return to_string(value);
}

}  // namespace

std::string report_to_json(PropertyReport const &report)
{
  using nlohmann::json;
  json doc;
  doc["property"]          = report.property;
  doc["mechanism"]         = std::string(to_string(report.mechanism));
  doc["verdict"]           = std::string(to_string(report.verdict));
  doc["instances_checked"] = report.instances_checked;
  doc["cases_checked"]     = report.cases_checked;
  doc["seed"]              = report.seed;
  if (report.value)
  {
    doc["value"] = value_json(*report.value);
  }
  if (report.witness)
  {
    Witness const &w = *report.witness;
    json           wj;
    wj["summary"] = w.summary;
    if (w.agent)
    {
      wj["agent"] = *w.agent;
    }
    if (w.other_agent)
    {
      wj["other_agent"] = *w.other_agent;
    }
    if (w.deviation)
    {
      json edges = json::array();
      for (auto const &key : w.deviation->edges)
      {
        edges.push_back({key.u, key.v});
      }
      wj["deviation"] = {{"edges", edges}, {"valuation", value_json(w.deviation->valuation)}};
    }
    if (w.before)
    {
      wj["before"] = value_json(*w.before);
    }
    if (w.after)
    {
      wj["after"] = value_json(*w.after);
    }
    if (w.edge)
    {
      wj["edge"] = {w.edge->u, w.edge->v};
    }
    if (w.edge_delta)
    {
      wj["edge_delta"] = value_json(*w.edge_delta);
    }
    wj["instance"] = json::parse(serialize_instance(w.instance, &w.profile));
    doc["witness"] = std::move(wj);
  }
  return doc.dump(2) + "\n";
}

Instance generate_instance(GeneratorParams const &params)
{
  if (params.agents > 12)
  {
    throw InputError("generator supports at most 12 agents");
  }
  if (!(params.edge_probability >= 0.0 && params.edge_probability <= 1.0))
  {
    throw InputError("edge probability must lie in [0, 1]");
  }
  if (params.max_cost < 1 || params.max_valuation < 0)
  {
    throw InputError("max_cost must be >= 1 and max_valuation >= 0");
  }

  std::vector<NodeId> agents;
  for (std::size_t i = 0; i < params.agents; ++i)
  {
    agents.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  std::vector<NodeId> nodes = agents;
  nodes.insert(nodes.begin(), "s");

  Rng rng(params.seed);
  for (std::size_t attempt = 0; attempt < params.max_retries; ++attempt)
  {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
      {
        double const coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::int64_t const cost = 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(params.max_cost)));
        if (coin < params.edge_probability)
        {
          edges.push_back({EdgeKey(nodes[i], nodes[j]), Rational{cost}});
        }
      }
    }
    std::map<NodeId, Rational> valuations;
    for (auto const &agent : agents)
    {
      valuations[agent] = Rational{static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(params.max_valuation) + 1))};
    }
    WeightedGraph const candidate("s", nodes, edges);
    if (candidate.connected())
    {
      return make_instance("s", agents, std::move(edges), std::move(valuations));
    }
  }
  throw InputError("could not generate a connected instance within the retry budget");
}

std::vector<Instance> generate_corpus(GeneratorParams const &base, std::size_t count)
{
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    GeneratorParams params = base;
    params.seed            = base.seed + i;
    out.push_back(generate_instance(params));
  }
  return out;
}

TwinInstance generate_twin_instance(std::uint64_t seed, bool dominated)
{
  Rng             rng(seed);
  GeneratorParams params;
  params.agents           = 2 + draw(rng, 3);
  params.edge_probability = 0.5;
  params.seed             = rng();
  Instance const base     = generate_instance(params);

  std::vector<NodeId> attach;
  for (auto const &node : base.graph.nodes())
  {
    if (draw(rng, 2) == 1)
    {
      attach.push_back(node);
    }
  }
  if (attach.empty())
  {
    attach.push_back(base.source());
  }

  std::vector<Edge> edges = base.graph.edges();
  for (auto const &k : attach)
  {
    std::int64_t const cx = 1 + static_cast<std::int64_t>(draw(rng, 5));
    std::int64_t const cy = dominated ? cx + static_cast<std::int64_t>(draw(rng, 3)) : cx;
    edges.push_back({EdgeKey("x", k), Rational{cx}});
    edges.push_back({EdgeKey("y", k), Rational{cy}});
  }
  if (draw(rng, 2) == 1)
  {
    edges.push_back({EdgeKey("x", "y"), Rational{1 + static_cast<std::int64_t>(draw(rng, 5))}});
  }

  std::vector<NodeId>        agents     = base.agents;
  std::map<NodeId, Rational> valuations = base.valuations;
  Rational const             twin_value{static_cast<std::int64_t>(draw(rng, 9))};
  agents.push_back("x");
  agents.push_back("y");
  valuations["x"] = twin_value;
  valuations["y"] = twin_value;
  return {make_instance(base.source(), std::move(agents), std::move(edges), std::move(valuations)), "x", "y"};
}

}  // namespace netshare
