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

#include <utility>

namespace netshare::fixtures {
namespace {

Edge edge(NodeId u, NodeId v, std::int64_t cost)
{
  return {EdgeKey(std::move(u), std::move(v)), Rational{cost}};
}

Instance build(std::vector<NodeId> agents, std::vector<Edge> edges,
               std::vector<std::pair<NodeId, std::int64_t>> const &values)
{
  std::map<NodeId, Rational> valuations;
  for (auto const &[label, value] : values)
  {
    valuations[label] = Rational{value};
  }
  return make_instance("s", std::move(agents), std::move(edges), std::move(valuations));
}

}  // namespace

Instance bird_manipulation()
{
  return build({"a", "b", "c"}, {edge("s", "a", 1), edge("a", "b", 3), edge("a", "c", 4), edge("b", "c", 2)},
               {{"a", 10}, {"b", 10}, {"c", 10}});
}

Instance triangle()
{
  return build({"a", "b"}, {edge("s", "a", 2), edge("s", "b", 4), edge("a", "b", 3)}, {{"a", 3}, {"b", 3}});
}

Instance line(Rational m, Rational n, Rational v_a, Rational v_b)
{
  return make_instance("s", {"a", "b"}, {{EdgeKey("s", "a"), m}, {EdgeKey("a", "b"), n}},
                       {{"a", v_a}, {"b", v_b}});
}

Instance line_deficit()
{
  return line(Rational{2}, Rational{3}, Rational{4}, Rational{10});
}

Instance zero_charge(Rational m)
{
  return make_instance("s", {"a", "b"},
                       {{EdgeKey("s", "a"), m}, {EdgeKey("s", "b"), m}, {EdgeKey("a", "b"), Rational{0}}},
                       {{"a", m}, {"b", m}});
}

Instance critical_values()
{
  return build({"a", "b", "c", "d"}, {edge("s", "b", 7), edge("a", "b", 8), edge("a", "c", 6), edge("a", "d", 5)},
               {{"a", 8}, {"b", 9}, {"c", 6}, {"d", 7}});
}

Instance staged_purchase()
{
  return build({"a", "b", "c", "d", "e", "f"},
               {edge("s", "b", 3), edge("a", "b", 4), edge("a", "d", 5), edge("c", "d", 5), edge("b", "e", 5),
                edge("a", "c", 6), edge("s", "f", 20)},
               {{"a", 4}, {"b", 6}, {"c", 5}, {"d", 6}, {"e", 7}, {"f", 1}});
}

Instance contraction_overcharge()
{
  return build({"i", "j", "x"}, {edge("s", "i", 1), edge("i", "j", 1), edge("i", "x", 3)},
               {{"i", 0}, {"j", 10}, {"x", 4}});
}

Instance staged_inefficiency()
{
  // First hit of a seeded scan (4 agents, seed 4): d sits on b's path yet is
  // excluded because its value is below the stage share.
  return build({"a", "b", "c", "d"},
               {edge("a", "b", 2), edge("s", "a", 5), edge("b", "d", 1), edge("s", "c", 1), edge("s", "d", 3)},
               {{"a", 0}, {"b", 5}, {"c", 5}, {"d", 1}});
}

Instance twin_split()
{
  return build({"a", "b", "c", "x", "y"},
               {edge("a", "b", 1), edge("a", "c", 1), edge("s", "a", 5), edge("a", "x", 4), edge("a", "y", 4),
                edge("b", "x", 3), edge("b", "y", 3), edge("c", "s", 4), edge("c", "x", 2), edge("c", "y", 2),
                edge("s", "x", 3), edge("s", "y", 3)},
               {{"a", 7}, {"b", 2}, {"c", 2}, {"x", 8}, {"y", 8}});
}

Instance critical_value_gap()
{
  return build({"a", "c", "d"},
               {edge("a", "c", 4), edge("a", "d", 10), edge("s", "a", 10), edge("c", "d", 10), edge("s", "d", 4)},
               {{"a", 2}, {"c", 14}, {"d", 1}});
}

std::vector<std::string> const &names()
{
  static std::vector<std::string> const all{"bird-manipulation", "triangle",      "line-deficit",
                                            "zero-charge",       "critical-values", "staged-purchase",
                                            "contraction-overcharge", "staged-inefficiency",
                                            "twin-split",        "critical-value-gap"};
  return all;
}

Instance by_name(std::string_view name)
{
  if (name == "bird-manipulation")
  {
    return bird_manipulation();
  }
  if (name == "triangle")
  {
    return triangle();
  }
  if (name == "line-deficit")
  {
    return line_deficit();
  }
  if (name == "zero-charge")
  {
    return zero_charge();
  }
  if (name == "critical-values")
  {
    return critical_values();
  }
  if (name == "staged-purchase")
  {
    return staged_purchase();
  }
  if (name == "contraction-overcharge")
  {
    return contraction_overcharge();
  }
  if (name == "staged-inefficiency")
  {
    return staged_inefficiency();
  }
  if (name == "twin-split")
  {
    return twin_split();
  }
  if (name == "critical-value-gap")
  {
    return critical_value_gap();
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace netshare::fixtures
