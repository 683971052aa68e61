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

#include "netshare/steiner.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace netshare {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t add(std::int64_t a, std::int64_t b)
{
  return (a >= kInf || b >= kInf) ? kInf : std::min(a + b, kInf);
}

/// Integer view of a graph: costs multiplied by the lcm of all denominators.
struct ScaledGraph
{
  std::size_t               n = 0;
  std::int64_t              scale = 1;
  std::vector<std::int64_t> weight;  // n*n, kInf when absent
  std::vector<std::int64_t> edge_cost;

  std::int64_t &at(std::size_t a, std::size_t b)
  {
    return weight[a * n + b];
  }
};

std::int64_t common_scale(WeightedGraph const &graph)
{
  std::int64_t scale = 1;
  for (auto const &edge : graph.edges())
  {
    scale = boost::integer::lcm(scale, edge.cost.denominator());
  }
  return scale;
}

ScaledGraph scale_graph(WeightedGraph const &graph)
{
  ScaledGraph out;
  out.n     = graph.nodes().size();
  out.scale = common_scale(graph);
  out.weight.assign(out.n * out.n, kInf);
  for (std::size_t i = 0; i < out.n; ++i)
  {
    out.at(i, i) = 0;
  }
  __int128 total = 0;
  for (auto const &edge : graph.edges())
  {
    __int128 const c = static_cast<__int128>(edge.cost.numerator()) * (out.scale / edge.cost.denominator());
    total += c;
    if (total >= kInf / 4)
    {
      throw InputError("edge costs too large for exact Steiner computation");
    }
    auto const a = graph.index_of(edge.key.u);
    auto const b = graph.index_of(edge.key.v);
    out.at(a, b) = out.at(b, a) = static_cast<std::int64_t>(c);
    out.edge_cost.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

void close_metric(std::vector<std::int64_t> &d, std::size_t n)
{
  for (std::size_t k = 0; k < n; ++k)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      auto const dik = d[i * n + k];
      if (dik >= kInf)
      {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
      {
        auto const via = add(dik, d[k * n + j]);
        if (via < d[i * n + j])
        {
          d[i * n + j] = via;
        }
      }
    }
  }
}

/// Dreyfus-Wagner. `dist` is a metric closure over n nodes. Returns, for every
/// mask over `terminals`, the cost of a minimum tree spanning those terminals
/// and `root`.
std::vector<std::int64_t> dreyfus_wagner(std::vector<std::int64_t> const &dist, std::size_t n,
                                         std::size_t root, std::vector<std::size_t> const &terminals)
{
  std::size_t const k    = terminals.size();
  std::size_t const full = std::size_t{1} << k;
  std::vector<std::int64_t> dp(full * n, kInf);
  std::vector<std::int64_t> merged(n);
  std::vector<std::int64_t> result(full, kInf);
  result[0] = 0;

  for (std::size_t i = 0; i < k; ++i)
  {
    auto const t = terminals[i];
    for (std::size_t v = 0; v < n; ++v)
    {
      dp[(std::size_t{1} << i) * n + v] = dist[t * n + v];
    }
  }

  for (std::size_t mask = 1; mask < full; ++mask)
  {
    if ((mask & (mask - 1)) != 0)
    {
      std::size_t const low = mask & (~mask + 1);
      std::fill(merged.begin(), merged.end(), kInf);
      // Submasks containing the lowest bit; each split visited once.
      for (std::size_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
      {
        if ((sub & low) == 0)
        {
          continue;
        }
        std::size_t const rest = mask ^ sub;
        for (std::size_t v = 0; v < n; ++v)
        {
          auto const c = add(dp[sub * n + v], dp[rest * n + v]);
          if (c < merged[v])
          {
            merged[v] = c;
          }
        }
      }
      for (std::size_t v = 0; v < n; ++v)
      {
        std::int64_t best = kInf;
        for (std::size_t u = 0; u < n; ++u)
        {
          auto const c = add(merged[u], dist[u * n + v]);
          if (c < best)
          {
            best = c;
          }
        }
        dp[mask * n + v] = best;
      }
    }
    result[mask] = dp[mask * n + root];
  }
  return result;
}

/// Union-find over node indices.
class DisjointSets
{
public:
  explicit DisjointSets(std::size_t n)
    : parent_(n)
  {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x)
    {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
    {
      return false;
    }
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

struct IndexedEdge
{
  std::size_t a;
  std::size_t b;
};

std::vector<IndexedEdge> index_edges(WeightedGraph const &graph)
{
  std::vector<IndexedEdge> out;
  out.reserve(graph.edges().size());
  for (auto const &edge : graph.edges())
  {
    out.push_back({graph.index_of(edge.key.u), graph.index_of(edge.key.v)});
  }
  return out;
}

/// Minimum cost of a tree that contains every edge in `forced`, spans
/// `terminals`, and otherwise uses only edges with index > `allowed_after`.
std::int64_t forced_tree_cost(ScaledGraph const &sg, std::vector<IndexedEdge> const &edges,
                              std::vector<std::size_t> const &forced, std::size_t allowed_after,
                              std::vector<std::size_t> const &terminals)
{
  DisjointSets  sets(sg.n);
  std::int64_t  base = 0;
  for (auto idx : forced)
  {
    if (!sets.unite(edges[idx].a, edges[idx].b))
    {
      return kInf;
    }
    base += sg.edge_cost[idx];
  }

  std::vector<std::size_t> component(sg.n, sg.n);
  std::size_t              count = 0;
  for (std::size_t v = 0; v < sg.n; ++v)
  {
    auto const r = sets.find(v);
    if (component[r] == sg.n)
    {
      component[r] = count++;
    }
    component[v] = component[r];
  }

  std::vector<std::int64_t> dist(count * count, kInf);
  for (std::size_t c = 0; c < count; ++c)
  {
    dist[c * count + c] = 0;
  }
  for (std::size_t idx = allowed_after + 1; idx < edges.size(); ++idx)
  {
    auto const a = component[edges[idx].a];
    auto const b = component[edges[idx].b];
    if (a != b && sg.edge_cost[idx] < dist[a * count + b])
    {
      dist[a * count + b] = dist[b * count + a] = sg.edge_cost[idx];
    }
  }
  close_metric(dist, count);

  std::vector<bool> required(count, false);
  for (auto t : terminals)
  {
    required[component[t]] = true;
  }
  for (auto idx : forced)
  {
    required[component[edges[idx].a]] = true;
  }
  std::vector<std::size_t> targets;
  for (std::size_t c = 0; c < count; ++c)
  {
    if (required[c])
    {
      targets.push_back(c);
    }
  }
  if (targets.size() <= 1)
  {
    return base;
  }
  std::size_t const root = targets.back();
  targets.pop_back();
  auto const costs = dreyfus_wagner(dist, count, root, targets);
  return add(base, costs.back());
}

/// Builds the lexicographically smallest optimal tree edge by edge: each step
/// takes the smallest edge that still extends to an optimal tree using only
/// larger edges.
std::set<EdgeKey> lexmin_witness(WeightedGraph const &graph, ScaledGraph const &sg,
                                 std::vector<std::size_t> const &terminals, std::int64_t optimum)
{
  auto const                edges = index_edges(graph);
  std::vector<std::size_t>  chosen;
  std::int64_t              chosen_cost = 0;
  std::set<EdgeKey>         out;

  auto spans = [&] {
    DisjointSets sets(sg.n);
    for (auto idx : chosen)
    {
      sets.unite(edges[idx].a, edges[idx].b);
    }
    auto const r = sets.find(terminals.front());
    return std::all_of(terminals.begin(), terminals.end(),
                       [&](std::size_t t) { return sets.find(t) == r; });
  };

  std::size_t next = 0;
  while (!spans())
  {
    bool extended = false;
    for (std::size_t idx = next; idx < edges.size(); ++idx)
    {
      if (chosen_cost + sg.edge_cost[idx] > optimum)
      {
        continue;
      }
      chosen.push_back(idx);
      if (forced_tree_cost(sg, edges, chosen, idx, terminals) == optimum)
      {
        chosen_cost += sg.edge_cost[idx];
        next     = idx + 1;
        extended = true;
        break;
      }
      chosen.pop_back();
    }
    if (!extended)
    {
      throw std::logic_error("Steiner witness reconstruction failed");
    }
  }
  for (auto idx : chosen)
  {
    out.insert(graph.edges()[idx].key);
  }
  return out;
}

Rational unscale(std::int64_t value, std::int64_t scale)
{
  return Rational{value, scale};
}

}  // namespace

std::optional<SteinerResult> steiner_cost(WeightedGraph const &graph, NodeSet const &terminals)
{
  std::vector<std::size_t> idx;
  for (auto const &t : terminals)
  {
    if (!graph.contains(t))
    {
      throw InputError("terminal '" + t + "' is not a graph node");
    }
    idx.push_back(graph.index_of(t));
  }
  if (idx.size() <= 1)
  {
    return SteinerResult{terminals, Rational{0}, {}};
  }

  ScaledGraph sg = scale_graph(graph);
  std::vector<std::int64_t> dist = sg.weight;
  close_metric(dist, sg.n);

  std::size_t const        root = idx.front();
  std::vector<std::size_t> rest(idx.begin() + 1, idx.end());
  auto const               optimum = dreyfus_wagner(dist, sg.n, root, rest).back();
  if (optimum >= kInf)
  {
    return std::nullopt;
  }
  return SteinerResult{terminals, unscale(optimum, sg.scale), lexmin_witness(graph, sg, idx, optimum)};
}

std::optional<SteinerResult> brute_force_steiner_oracle(WeightedGraph const &graph,
                                                        NodeSet const     &terminals)
{
  if (graph.nodes().size() > kOracleNodeCap)
  {
    throw SizeCapError("brute-force Steiner oracle is limited to " + std::to_string(kOracleNodeCap) +
                       " nodes");
  }
  for (auto const &t : terminals)
  {
    if (!graph.contains(t))
    {
      throw InputError("terminal '" + t + "' is not a graph node");
    }
  }
  if (terminals.size() <= 1)
  {
    return SteinerResult{terminals, Rational{0}, {}};
  }

  std::vector<NodeId> optional_nodes;
  for (auto const &node : graph.nodes())
  {
    if (terminals.count(node) == 0)
    {
      optional_nodes.push_back(node);
    }
  }

  // Kruskal order: cheapest first, then by key.
  std::vector<Edge> sorted = graph.edges();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](Edge const &a, Edge const &b) { return a.cost < b.cost; });

  std::optional<SteinerResult> best;
  for (std::uint32_t mask = 0; mask < (1U << optional_nodes.size()); ++mask)
  {
    NodeSet members = terminals;
    for (std::size_t i = 0; i < optional_nodes.size(); ++i)
    {
      if ((mask >> i) & 1U)
      {
        members.insert(optional_nodes[i]);
      }
    }

    std::map<NodeId, std::size_t> local;
    for (auto const &m : members)
    {
      local.emplace(m, local.size());
    }
    DisjointSets      sets(members.size());
    std::set<EdgeKey> tree;
    Rational          cost{0};
    for (auto const &edge : sorted)
    {
      auto a = local.find(edge.key.u);
      auto b = local.find(edge.key.v);
      if (a == local.end() || b == local.end())
      {
        continue;
      }
      if (sets.unite(a->second, b->second))
      {
        tree.insert(edge.key);
        cost += edge.cost;
      }
    }
    if (tree.size() + 1 != members.size())
    {
      continue;  // induced subgraph disconnected
    }
    if (!best || cost < best->cost)
    {
      best = SteinerResult{terminals, cost, std::move(tree)};
    }
  }
  return best;
}

std::set<EdgeKey> ContractedGraph::expand(std::set<EdgeKey> const &contracted_edges) const
{
  std::set<EdgeKey> out;
  for (auto const &key : contracted_edges)
  {
    auto it = original.find(key);
    if (it == original.end())
    {
      throw InputError("edge " + to_string(key) + " is not in the contracted graph");
    }
    out.insert(it->second);
  }
  return out;
}

ContractedGraph contract_into_source(WeightedGraph const &graph, NodeSet const &merged)
{
  NodeId const &source = graph.source();
  if (merged.count(source) == 0)
  {
    throw InputError("merged set must contain the source");
  }
  for (auto const &m : merged)
  {
    if (!graph.contains(m))
    {
      throw InputError("unknown node '" + m + "'");
    }
  }

  std::vector<NodeId> nodes;
  for (auto const &node : graph.nodes())
  {
    if (node == source || merged.count(node) == 0)
    {
      nodes.push_back(node);
    }
  }

  std::map<EdgeKey, Edge>    best;
  std::map<EdgeKey, EdgeKey> origin;
  for (auto const &edge : graph.edges())
  {
    bool const u_in = merged.count(edge.key.u) > 0;
    bool const v_in = merged.count(edge.key.v) > 0;
    if (u_in && v_in)
    {
      continue;
    }
    EdgeKey key = edge.key;
    if (u_in)
    {
      key = EdgeKey(source, edge.key.v);
    }
    else if (v_in)
    {
      key = EdgeKey(edge.key.u, source);
    }
    // Edges arrive in key order, so strict < keeps the smallest original key on ties.
    auto it = best.find(key);
    if (it == best.end() || edge.cost < it->second.cost)
    {
      best[key]   = Edge{key, edge.cost};
      origin[key] = edge.key;
    }
  }

  std::vector<Edge> edges;
  for (auto const &[key, edge] : best)
  {
    edges.push_back(edge);
  }
  return {WeightedGraph(source, std::move(nodes), std::move(edges)), merged, std::move(origin)};
}

SubsetCostTable::SubsetCostTable(WeightedGraph const &graph, std::vector<NodeId> universe)
  : universe_(std::move(universe))
{
  if (universe_.size() > kMaxUniverse)
  {
    throw SizeCapError("subset cost table limited to " + std::to_string(kMaxUniverse) + " terminals");
  }
  ScaledGraph sg = scale_graph(graph);
  scale_         = sg.scale;
  std::vector<std::int64_t> dist = sg.weight;
  close_metric(dist, sg.n);

  std::vector<std::size_t> terminals;
  for (auto const &t : universe_)
  {
    terminals.push_back(graph.index_of(t));
  }
  scaled_ = dreyfus_wagner(dist, sg.n, graph.index_of(graph.source()), terminals);
}

std::optional<Rational> SubsetCostTable::cost(std::uint32_t mask) const
{
  if (mask >= scaled_.size())
  {
    throw InputError("subset mask outside the table universe");
  }
  auto const value = scaled_[mask];
  if (value >= kInf)
  {
    return std::nullopt;
  }
  return Rational{value, scale_};
}

std::shared_ptr<SubsetCostTable const> SteinerCache::table(WeightedGraph const     &graph,
                                                           std::vector<NodeId> const &universe)
{
  std::string key = graph.fingerprint() + "#";
  for (auto const &u : universe)
  {
    key += u + ",";
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end())
    {
      return it->second;
    }
  }
  auto built = std::make_shared<SubsetCostTable const>(graph, universe);
  std::lock_guard lock(mutex_);
  return tables_.emplace(std::move(key), std::move(built)).first->second;
}

std::size_t SteinerCache::size() const
{
  std::lock_guard lock(mutex_);
  return tables_.size();
}

}  // namespace netshare
