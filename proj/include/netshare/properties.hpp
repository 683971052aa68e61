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

#include "netshare/allocation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netshare {

enum class Verdict
{
  holds,
  violated,
};

std::string_view to_string(Verdict verdict);

/// Raised by the pairwise checks when the pair does not meet the premise.
class HypothesisError : public InputError
{
public:
  using InputError::InputError;
};

/// Everything needed to replay a violation on its own.
struct Witness
{
  std::string                  summary;
  Instance                     instance;
  ReportProfile                profile;  // the profile the mechanism was run on
  std::optional<NodeId>        agent;
  std::optional<AgentReport>   deviation;
  std::optional<Rational>      before;  // e.g. truthful utility
  std::optional<Rational>      after;   // e.g. utility under the deviation
  std::optional<EdgeKey>       edge;
  std::optional<Rational>      edge_delta;
  std::optional<NodeId>        other_agent;
};

struct PropertyReport
{
  std::string             property;
  Mechanism               mechanism = Mechanism::cvm;
  Verdict                 verdict   = Verdict::holds;
  std::optional<Witness>  witness;
  std::size_t             instances_checked = 0;
  std::size_t             cases_checked     = 0;
  std::uint64_t           seed              = 0;
  std::optional<Rational> value;  // ratio properties: smallest observed ratio

  bool holds() const
  {
    return verdict == Verdict::holds;
  }
};

/// Every report one agent may submit: each subset of its true edges crossed
/// with the valuation grid {k*step : 0 <= k*step <= Vmax + 1} plus its true
/// valuation. The truthful report comes first.
struct DeviationSet
{
  NodeId                   agent;
  std::vector<AgentReport> reports;

  static DeviationSet for_agent(Instance const &instance, NodeId const &agent,
                                Rational const &step = Rational{1, 2});
};

struct CheckOptions
{
  Rational         grid_step{1, 2};
  /// Random report profiles drawn per check (per agent for IR).
  std::size_t      samples = 200;
  std::uint64_t    seed    = 1;
  MechanismOptions mechanism;
};

PropertyReport check_truthfulness(Instance const &instance, Mechanism mechanism,
                                  CheckOptions const &options = {});
/// Same, with caller-provided deviation sets (one per agent to test).
PropertyReport check_truthfulness(Instance const &instance, Mechanism mechanism,
                                  std::vector<DeviationSet> const &deviations,
                                  CheckOptions const              &options = {});

/// x_i <= v_i' on the truthful profile and on sampled report profiles.
PropertyReport check_feasibility(Instance const &instance, Mechanism mechanism,
                                 CheckOptions const &options = {});
/// u_i >= 0 for a truthful agent i against sampled reports of the others.
PropertyReport check_individual_rationality(Instance const &instance, Mechanism mechanism,
                                            CheckOptions const &options = {});
/// x_i >= 0 on the truthful profile and on sampled report profiles.
PropertyReport check_positiveness(Instance const &instance, Mechanism mechanism,
                                  CheckOptions const &options = {});
/// Sum of shares equals the cost of the selected edges, exactly.
PropertyReport check_budget_balance(Instance const &instance, Mechanism mechanism,
                                    CheckOptions const &options = {});

inline constexpr std::size_t kEfficiencyAgentCap = 8;

/// Largest SW(S) over every subset S of agents, by direct enumeration.
Rational max_social_welfare(Instance const &instance, ReportProfile const &profile);

/// SW(g) equals the enumerated maximum, on the truthful and sampled profiles.
PropertyReport check_efficiency(Instance const &instance, Mechanism mechanism,
                                CheckOptions const &options = {});

/// Premise for symmetry/ranking on the true graph: equal valuations and the
/// same neighbours apart from each other (the source counts as a neighbour).
/// `dominated` asks for c(i,k) <= c(j,k) instead of equality.
bool twin_premise(Instance const &instance, NodeId const &i, NodeId const &j, bool dominated);

/// u_i == u_j at the truthful profile. Throws HypothesisError if the pair is not symmetric.
PropertyReport check_symmetry(Instance const &instance, Mechanism mechanism, NodeId const &i,
                              NodeId const &j, CheckOptions const &options = {});
/// u_i >= u_j at the truthful profile. Throws HypothesisError unless i's
/// costs are dominated by j's.
PropertyReport check_ranking(Instance const &instance, Mechanism mechanism, NodeId const &i,
                             NodeId const &j, CheckOptions const &options = {});

/// Symmetry or ranking over every qualifying ordered pair of the instance.
PropertyReport check_symmetry_all(Instance const &instance, Mechanism mechanism,
                                  CheckOptions const &options = {});
PropertyReport check_ranking_all(Instance const &instance, Mechanism mechanism,
                                 CheckOptions const &options = {});

/// Raising c(edge) by `delta` never raises an endpoint agent's truthful utility.
PropertyReport check_utility_monotonicity(Instance const &instance, Mechanism mechanism,
                                          EdgeKey const &edge, Rational const &delta,
                                          CheckOptions const &options = {});
/// The above over every edge of the instance.
PropertyReport check_utility_monotonicity_all(Instance const &instance, Mechanism mechanism,
                                              Rational const     &delta   = Rational{1},
                                              CheckOptions const &options = {});

/// Sum of shares over the cost of the selected edges at the truthful profile;
/// std::nullopt when nothing is selected or that cost is zero.
std::optional<Rational> budget_balance_ratio(Instance const &instance, Mechanism mechanism,
                                             MechanismOptions const &options = {});

/// SW(selection) / max SW at `profile`. Throws InputError when max SW <= 0.
Rational welfare_ratio(Instance const &instance, ReportProfile const &profile,
                       NodeSet const &selection);
/// Same for the mechanism's own selection at the truthful profile.
Rational welfare_ratio(Instance const &instance, Mechanism mechanism,
                       MechanismOptions const &options = {});

/// Re-runs the witness's profile and reports whether the violation recurs.
bool replay_witness(PropertyReport const &report, MechanismOptions const &options = {});

/// Property names accepted by run_property.
std::vector<std::string> const &property_names();

/// Runs one named property on one instance. Ratio properties report their
/// smallest ratio in `value`; "bbr" is violated when some ratio is 0 and
/// "welfare-ratio" when some ratio is below 1.
PropertyReport run_property(std::string_view name, Instance const &instance, Mechanism mechanism,
                            CheckOptions const &options = {});

/// Runs a property over a corpus; the first violation is kept as witness.
PropertyReport run_property(std::string_view name, std::vector<Instance> const &corpus,
                            Mechanism mechanism, CheckOptions const &options = {});

std::string report_to_json(PropertyReport const &report);

struct GeneratorParams
{
  std::size_t   agents           = 4;
  double        edge_probability = 0.5;
  std::int64_t  max_cost         = 5;
  std::int64_t  max_valuation    = 8;
  std::uint64_t seed             = 1;
  std::size_t   max_retries      = 1000;
};

/// Random connected instance with source "s" and agents "a", "b", ...
/// Costs are integers in [1, max_cost], valuations integers in
/// [0, max_valuation]. Deterministic in the seed.
Instance generate_instance(GeneratorParams const &params);

/// `count` instances with seeds base.seed, base.seed + 1, ...
std::vector<Instance> generate_corpus(GeneratorParams const &base, std::size_t count);

struct TwinInstance
{
  Instance instance;
  NodeId   first;   // i: the cheaper twin when dominated
  NodeId   second;  // j
};

/// Random instance with two added agents "x" and "y" sharing neighbours and
/// valuation. With `dominated`, x's edge costs are at most y's; otherwise
/// they are equal.
TwinInstance generate_twin_instance(std::uint64_t seed, bool dominated);

}  // namespace netshare
