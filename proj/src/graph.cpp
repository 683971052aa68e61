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

#include "netshare/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

namespace netshare {

EdgeKey::EdgeKey(NodeId a, NodeId b)
{
  if (b < a)
  {
    std::swap(a, b);
  }
  u = std::move(a);
  v = std::move(b);
}

std::string to_string(EdgeKey const &key)
{
  return "(" + key.u + "," + key.v + ")";
}

WeightedGraph::WeightedGraph(NodeId source, std::vector<NodeId> nodes, std::vector<Edge> edges)
  : source_(std::move(source))
  , nodes_(std::move(nodes))
  , edges_(std::move(edges))
{
  std::sort(nodes_.begin(), nodes_.end());
  if (auto dup = std::adjacent_find(nodes_.begin(), nodes_.end()); dup != nodes_.end())
  {
    throw InputError("duplicate node label '" + *dup + "'");
  }
  if (!contains(source_))
  {
    throw InputError("source '" + source_ + "' is not a node of the graph");
  }

  for (auto &edge : edges_)
  {
    edge.key = EdgeKey(edge.key.u, edge.key.v);
    if (edge.key.u == edge.key.v)
    {
      throw InputError("self-loop on '" + edge.key.u + "'");
    }
    if (!contains(edge.key.u) || !contains(edge.key.v))
    {
      throw InputError("edge " + to_string(edge.key) + " has an endpoint that is not a node");
    }
    if (edge.cost < 0)
    {
      throw InputError("edge " + to_string(edge.key) + " has negative cost " + to_string(edge.cost));
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](Edge const &a, Edge const &b) { return a.key < b.key; });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(),
                                [](Edge const &a, Edge const &b) { return a.key == b.key; });
  if (dup != edges_.end())
  {
    throw InputError("duplicate edge " + to_string(dup->key));
  }
}

bool WeightedGraph::contains(NodeId const &node) const
{
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::size_t WeightedGraph::index_of(NodeId const &node) const
{
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node)
  {
    throw InputError("unknown node '" + node + "'");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::optional<Rational> WeightedGraph::cost(EdgeKey const &key) const
{
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](Edge const &e, EdgeKey const &k) { return e.key < k; });
  if (it == edges_.end() || it->key != key)
  {
    return std::nullopt;
  }
  return it->cost;
}

NodeSet WeightedGraph::adjacent(NodeId const &node) const
{
  NodeSet out;
  for (auto const &edge : edges_)
  {
    if (edge.key.touches(node))
    {
      out.insert(edge.key.other(node));
    }
  }
  return out;
}

NodeSet WeightedGraph::reachable_from_source() const
{
  NodeSet            seen{source_};
  std::deque<NodeId> queue{source_};
  while (!queue.empty())
  {
    NodeId current = std::move(queue.front());
    queue.pop_front();
    for (auto const &next : adjacent(current))
    {
      if (seen.insert(next).second)
      {
        queue.push_back(next);
      }
    }
  }
  return seen;
}

bool WeightedGraph::connected() const
{
  return reachable_from_source().size() == nodes_.size();
}

Rational WeightedGraph::total_cost(std::set<EdgeKey> const &edges) const
{
  Rational total{0};
  for (auto const &key : edges)
  {
    auto c = cost(key);
    if (!c)
    {
      throw InputError("edge " + to_string(key) + " is not in the graph");
    }
    total += *c;
  }
  return total;
}

std::string WeightedGraph::fingerprint() const
{
  std::ostringstream out;
  out << source_ << '|';
  for (auto const &node : nodes_)
  {
    out << node << ',';
  }
  out << '|';
  for (auto const &edge : edges_)
  {
    out << edge.key.u << ' ' << edge.key.v << ' ' << to_string(edge.cost) << ';';
  }
  return out.str();
}

bool Instance::is_agent(NodeId const &node) const
{
  return std::binary_search(agents.begin(), agents.end(), node);
}

std::vector<EdgeKey> Instance::adjacent_edges(NodeId const &node) const
{
  std::vector<EdgeKey> out;
  for (auto const &edge : graph.edges())
  {
    if (edge.key.touches(node))
    {
      out.push_back(edge.key);
    }
  }
  return out;
}

Instance make_instance(NodeId source, std::vector<NodeId> agents, std::vector<Edge> edges,
                       std::map<NodeId, Rational> valuations)
{
  if (std::find(agents.begin(), agents.end(), source) != agents.end())
  {
    throw InputError("source label '" + source + "' also listed as an agent");
  }
  std::vector<NodeId> nodes = agents;
  nodes.push_back(source);

  Instance instance;
  instance.graph = WeightedGraph(std::move(source), std::move(nodes), std::move(edges));
  std::sort(agents.begin(), agents.end());
  instance.agents = std::move(agents);

  for (auto const &[label, value] : valuations)
  {
    if (!instance.is_agent(label))
    {
      throw InputError("valuation given for non-agent '" + label + "'");
    }
    if (value < 0)
    {
      throw InputError("agent '" + label + "' has negative valuation " + to_string(value));
    }
  }
  for (auto const &agent : instance.agents)
  {
    if (valuations.find(agent) == valuations.end())
    {
      throw InputError("agent '" + agent + "' has no valuation");
    }
  }
  instance.valuations = std::move(valuations);

  if (!instance.graph.connected())
  {
    throw InputError("graph is not connected");
  }
  return instance;
}

AgentReport const &ReportProfile::at(NodeId const &agent) const
{
  auto it = reports.find(agent);
  if (it == reports.end())
  {
    throw InputError("no report for '" + agent + "'");
  }
  return it->second;
}

ReportProfile truthful_profile(Instance const &instance)
{
  ReportProfile profile{instance.source(), {}};
  for (auto const &agent : instance.agents)
  {
    auto        edges = instance.adjacent_edges(agent);
    AgentReport report{{edges.begin(), edges.end()}, instance.valuations.at(agent)};
    profile.reports.emplace(agent, std::move(report));
  }
  return profile;
}

void validate_report(Instance const &instance, NodeId const &agent, AgentReport const &report)
{
  if (!instance.is_agent(agent))
  {
    throw InputError("'" + agent + "' is not an agent");
  }
  if (report.valuation < 0)
  {
    throw InputError("agent '" + agent + "' reports negative valuation");
  }
  for (auto const &key : report.edges)
  {
    if (!key.touches(agent) || !instance.graph.cost(key))
    {
      throw InputError("agent '" + agent + "' declares edge " + to_string(key) +
                       " it does not have");
    }
  }
}

void validate_profile(Instance const &instance, ReportProfile const &profile)
{
  if (profile.source != instance.source())
  {
    throw InputError("profile source does not match instance source");
  }
  for (auto const &[agent, report] : profile.reports)
  {
    validate_report(instance, agent, report);
  }
  for (auto const &agent : instance.agents)
  {
    if (profile.reports.find(agent) == profile.reports.end())
    {
      throw InputError("no report for '" + agent + "'");
    }
  }
}

namespace {

bool declares(ReportProfile const &profile, NodeId const &node, EdgeKey const &key)
{
  if (node == profile.source)
  {
    return true;
  }
  auto it = profile.reports.find(node);
  return it != profile.reports.end() && it->second.edges.count(key) > 0;
}

}  // namespace

WeightedGraph induced_graph(Instance const &instance, ReportProfile const &profile)
{
  validate_profile(instance, profile);
  std::vector<Edge> kept;
  for (auto const &edge : instance.graph.edges())
  {
    if (declares(profile, edge.key.u, edge.key) && declares(profile, edge.key.v, edge.key))
    {
      kept.push_back(edge);
    }
  }
  return {instance.source(), instance.graph.nodes(), std::move(kept)};
}

NodeSet neighbors(ReportProfile const &profile, NodeId const &node)
{
  if (node != profile.source && profile.reports.find(node) == profile.reports.end())
  {
    throw InputError("unknown node '" + node + "'");
  }
  NodeSet out;
  for (auto const &[agent, report] : profile.reports)
  {
    if (agent == node)
    {
      continue;
    }
    EdgeKey key(node, agent);
    if (report.edges.count(key) > 0 && declares(profile, node, key))
    {
      out.insert(agent);
    }
  }
  return out;
}

ReportProfile apply_deviation(Instance const &instance, ReportProfile const &profile,
                              NodeId const &agent, AgentReport report)
{
  validate_report(instance, agent, report);
  ReportProfile out   = profile;
  out.reports[agent] = std::move(report);
  return out;
}

Instance with_edge_cost(Instance const &instance, EdgeKey const &key, Rational cost)
{
  if (!instance.graph.cost(key))
  {
    throw InputError("unknown edge " + to_string(key));
  }
  std::vector<Edge> edges = instance.graph.edges();
  for (auto &edge : edges)
  {
    if (edge.key == key)
    {
      edge.cost = cost;
    }
  }
  Instance out = instance;
  out.graph    = WeightedGraph(instance.source(), instance.graph.nodes(), std::move(edges));
  return out;
}

namespace {

using nlohmann::json;

Rational number_from_json(json const &value, std::string const &where)
{
  if (value.is_number_integer())
  {
    return Rational{value.get<std::int64_t>()};
  }
  if (value.is_string())
  {
    return parse_rational(value.get<std::string>());
  }
  throw InputError("malformed number at " + where + ": use an integer or a quoted decimal/fraction");
}

json number_to_json(Rational const &value)
{
  if (value.denominator() == 1)
  {
    return value.numerator();
  }
  return to_string(value);
}

std::string label_from_json(json const &value, std::string const &where)
{
  if (!value.is_string())
  {
    throw InputError("expected a string label at " + where);
  }
  return value.get<std::string>();
}

}  // namespace

InstanceDocument parse_instance_document(std::string_view text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (json::parse_error const &e)
  {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object())
  {
    throw InputError("instance document must be a JSON object");
  }
  for (char const *field : {"source", "agents", "edges", "valuations"})
  {
    if (!doc.contains(field))
    {
      throw InputError(std::string("missing field '") + field + "'");
    }
  }

  NodeId source = label_from_json(doc["source"], "source");

  if (!doc["agents"].is_array())
  {
    throw InputError("'agents' must be a list");
  }
  std::vector<NodeId> agents;
  for (auto const &a : doc["agents"])
  {
    agents.push_back(label_from_json(a, "agents"));
  }

  if (!doc["edges"].is_array())
  {
    throw InputError("'edges' must be a list");
  }
  std::vector<Edge> edges;
  for (auto const &e : doc["edges"])
  {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("cost"))
    {
      throw InputError("each edge needs 'u', 'v' and 'cost'");
    }
    EdgeKey key(label_from_json(e["u"], "edge.u"), label_from_json(e["v"], "edge.v"));
    edges.push_back({key, number_from_json(e["cost"], "edge " + to_string(key))});
  }

  if (!doc["valuations"].is_object())
  {
    throw InputError("'valuations' must be a map");
  }
  std::map<NodeId, Rational> valuations;
  for (auto const &[label, value] : doc["valuations"].items())
  {
    valuations[label] = number_from_json(value, "valuation of " + label);
  }

  InstanceDocument out{make_instance(std::move(source), std::move(agents), std::move(edges),
                                     std::move(valuations)),
                       std::nullopt};

  if (doc.contains("reports"))
  {
    if (!doc["reports"].is_object())
    {
      throw InputError("'reports' must be a map");
    }
    ReportProfile profile = truthful_profile(out.instance);
    for (auto const &[label, r] : doc["reports"].items())
    {
      if (!r.is_object() || !r.contains("edges") || !r.contains("valuation") ||
          !r["edges"].is_array())
      {
        throw InputError("report of '" + label + "' needs 'edges' and 'valuation'");
      }
      AgentReport report;
      for (auto const &pair : r["edges"])
      {
        if (!pair.is_array() || pair.size() != 2)
        {
          throw InputError("report edges of '" + label + "' must be [u, v] pairs");
        }
        report.edges.emplace(label_from_json(pair[0], "report edge"),
                             label_from_json(pair[1], "report edge"));
      }
      report.valuation = number_from_json(r["valuation"], "report valuation of " + label);
      validate_report(out.instance, label, report);
      profile.reports[label] = std::move(report);
    }
    out.reports = std::move(profile);
  }
  return out;
}

Instance parse_instance(std::string_view text)
{
  return parse_instance_document(text).instance;
}

std::string serialize_instance(Instance const &instance, ReportProfile const *reports)
{
  json doc;
  doc["source"] = instance.source();
  doc["agents"] = instance.agents;
  doc["edges"]  = json::array();
  for (auto const &edge : instance.graph.edges())
  {
    doc["edges"].push_back({{"u", edge.key.u}, {"v", edge.key.v}, {"cost", number_to_json(edge.cost)}});
  }
  doc["valuations"] = json::object();
  for (auto const &[label, value] : instance.valuations)
  {
    doc["valuations"][label] = number_to_json(value);
  }
  if (reports != nullptr)
  {
    doc["reports"] = json::object();
    for (auto const &[label, report] : reports->reports)
    {
      json r;
      r["edges"] = json::array();
      for (auto const &key : report.edges)
      {
        r["edges"].push_back({key.u, key.v});
      }
      r["valuation"]         = number_to_json(report.valuation);
      doc["reports"][label] = std::move(r);
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace netshare
