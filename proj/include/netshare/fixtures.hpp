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

#include <string>
#include <string_view>
#include <vector>

namespace netshare::fixtures {

/// Bumped whenever an embedded instance changes.
inline constexpr int kVersion = 1;

/// s-a-b-c with a b-c shortcut; Prim charges b 3, and 2 once b withholds (a,b).
Instance bird_manipulation();

/// Triangle s,a,b with costs (s,a)=2, (s,b)=4, (a,b)=3 and valuations 3, 3.
Instance triangle();

/// Line s -(m)- a -(n)- b with valuations v_a, v_b.
Instance line(Rational m, Rational n, Rational v_a, Rational v_b);

/// line(2, 3, 4, 10).
Instance line_deficit();

/// Two agents worth m each, both at cost m from s, joined by a free edge.
Instance zero_charge(Rational m = Rational{5});

/// Four agents around a star-like tree where every critical value is positive.
Instance critical_values();

/// Six agents bought in three stages at shares 3, 4 and 5; one is left out.
Instance staged_purchase();

/// Where merging only the selected agents into the source overcharges.
Instance contraction_overcharge();

/// Where the staged mechanism leaves welfare on the table.
Instance staged_inefficiency();

/// Identical twins x and y that the staged mechanism buys in different stages:
/// x joins a cheap relay group at 7/4, y follows alone at 2.
Instance twin_split();

/// Where d gains 1 under CVM by reporting 3 instead of 1: the selection moves
/// from {a, c} to {c, d}, and pricing d against {c} alone makes its charge zero.
Instance critical_value_gap();

std::vector<std::string> const &names();
/// Throws InputError for unknown names.
Instance by_name(std::string_view name);

}  // namespace netshare::fixtures
