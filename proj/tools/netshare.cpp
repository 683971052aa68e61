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

// netshare: command-line front end for the cost-sharing mechanisms.

#include "netshare/fixtures.hpp"
#include "netshare/properties.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace netshare;

constexpr int kExitOk       = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput    = 2;
constexpr int kExitSizeCap  = 3;

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Source
{
  std::string input;
  std::string fixture;

  void attach(CLI::App *cmd)
  {
    cmd->add_option("--input,-i", input, "instance document (JSON)");
    cmd->add_option("--fixture", fixture, "embedded instance by name");
  }

  bool given() const
  {
    return !input.empty() || !fixture.empty();
  }

  InstanceDocument load() const
  {
    if (!input.empty() && !fixture.empty())
    {
      throw InputError("use either --input or --fixture, not both");
    }
    if (!fixture.empty())
    {
      return {fixtures::by_name(fixture), std::nullopt};
    }
    if (input.empty())
    {
      throw InputError("an instance is required (--input or --fixture)");
    }
    return parse_instance_document(read_file(input));
  }
};

struct GenOptions
{
  std::size_t   agents           = 4;
  double        edge_probability = 0.5;
  std::int64_t  max_cost         = 5;
  std::int64_t  max_valuation    = 8;
  std::uint64_t seed             = 1;

  void attach(CLI::App *cmd)
  {
    cmd->add_option("--agents", agents, "number of agents")->capture_default_str();
    cmd->add_option("--edge-probability", edge_probability, "probability of each possible edge")->capture_default_str();
    cmd->add_option("--max-cost", max_cost, "largest integer edge cost")->capture_default_str();
    cmd->add_option("--max-valuation", max_valuation, "largest integer valuation")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  }

  GeneratorParams params() const
  {
    GeneratorParams p;
    p.agents           = agents;
    p.edge_probability = edge_probability;
    p.max_cost         = max_cost;
    p.max_valuation    = max_valuation;
    p.seed             = seed;
    return p;
  }
};

struct Variants
{
  bool literal_contraction = false;
  bool cv_all_others       = false;

  void attach(CLI::App *cmd)
  {
    cmd->add_flag("--literal-contraction", literal_contraction,
                  "RSM: merge only selected agents into the source");
    cmd->add_flag("--cv-all-others", cv_all_others,
                  "CVM: price each agent against every other agent, not only the selected ones");
  }

  MechanismOptions options() const
  {
    MechanismOptions out;
    if (literal_contraction)
    {
      out.contraction = RsmContraction::selected_nodes;
    }
    if (cv_all_others)
    {
      out.cv_ground = CriticalValueGround::all_others;
    }
    return out;
  }
};

int cmd_solve(std::string const &mechanism_name, Source const &source, bool trace,
              Variants const &variants)
{
  Mechanism const        mechanism = parse_mechanism(mechanism_name);
  InstanceDocument const doc       = source.load();
  ReportProfile const    profile   = doc.reports ? *doc.reports : truthful_profile(doc.instance);
  Allocation const       result    = run_mechanism(mechanism, doc.instance, profile, variants.options());
  std::cout << allocation_to_json(result, mechanism, trace);
  return kExitOk;
}

int cmd_check(std::string const &property, std::string const &mechanism_name, Source const &source,
              GenOptions const &gen, std::size_t instances, std::size_t samples, std::string const &step,
              Variants const &variants)
{
  Mechanism const mechanism = parse_mechanism(mechanism_name);
  std::vector<std::string> properties;
  if (property == "all")
  {
    properties = property_names();
  }
  else
  {
    auto const &known = property_names();
    if (std::find(known.begin(), known.end(), property) == known.end())
    {
      throw InputError("unknown property '" + property + "'");
    }
    properties.push_back(property);
  }

  CheckOptions options;
  options.seed      = gen.seed;
  options.samples   = samples;
  options.grid_step = parse_rational(step);
  options.mechanism = variants.options();

  std::vector<Instance> corpus;
  if (source.given())
  {
    corpus.push_back(source.load().instance);
  }
  else
  {
    corpus = generate_corpus(gen.params(), instances);
  }

  nlohmann::json reports = nlohmann::json::array();
  bool           all_hold = true;
  for (auto const &name : properties)
  {
    PropertyReport const report = run_property(name, corpus, mechanism, options);
    all_hold                    = all_hold && report.holds();
    reports.push_back(nlohmann::json::parse(report_to_json(report)));
  }
  std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_hold ? kExitOk : kExitViolated;
}

void print_instance(Instance const &instance)
{
  std::cout << "  edges:";
  for (auto const &edge : instance.graph.edges())
  {
    std::cout << " " << to_string(edge.key) << "=" << to_string(edge.cost);
  }
  std::cout << "\n  valuations:";
  for (auto const &[agent, value] : instance.valuations)
  {
    std::cout << " " << agent << "=" << to_string(value);
  }
  std::cout << "\n";
}

void print_shares(std::string_view label, Allocation const &allocation)
{
  std::cout << "  " << label << " shares:";
  for (auto const &[agent, share] : allocation.shares)
  {
    std::cout << " " << agent << "=" << to_string(share);
  }
  std::cout << "  (charged " << to_string(allocation.total_shares()) << ", cost "
            << to_string(allocation.total_cost) << ")\n";
}

void print_verdict(std::string_view mechanism, PropertyReport const &report)
{
  std::cout << "  " << mechanism << " " << report.property << ": " << to_string(report.verdict) << "\n";
}

int demo_bird()
{
  Instance const instance = fixtures::bird_manipulation();
  std::cout << "Bird rule manipulation (fixture bird-manipulation)\n";
  print_instance(instance);
  ReportProfile const truthful = truthful_profile(instance);
  print_shares("truthful", run_mechanism(Mechanism::bird, instance, truthful));

  AgentReport cut = truthful.at("b");
  cut.edges.erase(EdgeKey("a", "b"));
  ReportProfile const deviated = apply_deviation(instance, truthful, "b", cut);
  print_shares("b withholds (a,b)", run_mechanism(Mechanism::bird, instance, deviated));

  PropertyReport const report = check_truthfulness(instance, Mechanism::bird);
  print_verdict("bird", report);
  if (report.witness)
  {
    std::cout << "  witness: agent " << *report.witness->agent << " utility " << to_string(*report.witness->before)
              << " -> " << to_string(*report.witness->after) << " by declaring {";
    bool first = true;
    for (auto const &key : report.witness->deviation->edges)
    {
      std::cout << (first ? "" : ", ") << to_string(key);
      first = false;
    }
    std::cout << "}\n";
  }
  for (auto mechanism : {Mechanism::cvm, Mechanism::rsm})
  {
    print_verdict(to_string(mechanism), check_truthfulness(instance, mechanism));
  }
  return kExitOk;
}

int demo_bb()
{
  Instance const instance = fixtures::line_deficit();
  std::cout << "Truthfulness, feasibility, efficiency and budget balance cannot all hold (fixture line-deficit)\n";
  print_instance(instance);
  ReportProfile const truthful = truthful_profile(instance);
  print_shares("cvm", run_mechanism(Mechanism::cvm, instance, truthful));
  print_shares("rsm", run_mechanism(Mechanism::rsm, instance, truthful));
  for (auto const *name : {"truthfulness", "feasibility", "efficiency", "budget-balance"})
  {
    print_verdict("cvm", run_property(name, instance, Mechanism::cvm));
  }
  for (auto const *name : {"truthfulness", "feasibility", "budget-balance"})
  {
    print_verdict("rsm", run_property(name, instance, Mechanism::rsm));
  }
  Instance const lossy = fixtures::staged_inefficiency();
  std::cout << "RSM on fixture staged-inefficiency:\n";
  print_instance(lossy);
  Allocation const result = run_mechanism(Mechanism::rsm, lossy, truthful_profile(lossy));
  print_shares("rsm", result);
  std::cout << "  rsm welfare " << to_string(result.social_welfare) << " vs optimum "
            << to_string(max_social_welfare(lossy, truthful_profile(lossy))) << "\n";
  print_verdict("rsm", run_property("efficiency", lossy, Mechanism::rsm));
  return kExitOk;
}

int demo_bbr()
{
  Instance const instance = fixtures::zero_charge();
  std::cout << "CVM has no positive budget balance ratio (fixture zero-charge, m=5)\n";
  print_instance(instance);
  print_shares("cvm", run_mechanism(Mechanism::cvm, instance, truthful_profile(instance)));
  auto const ratio = budget_balance_ratio(instance, Mechanism::cvm);
  std::cout << "  cvm budget balance ratio: " << (ratio ? to_string(*ratio) : "undefined") << "\n";
  return kExitOk;
}

int demo_welfare()
{
  Rational const m{2};
  Rational const n{3};
  Rational const v_a{4};
  std::cout << "Welfare ratio of selecting only a on the line s-(2)-a-(3)-b, v_a=4, v_b=3+p\n";
  std::cout << "  p\tratio\t(v_a-m)/(v_a-m+p)\trsm ratio\n";
  for (Rational const p : {Rational{1, 2}, Rational{1}, Rational{10}, Rational{100}})
  {
    Instance const instance = fixtures::line(m, n, v_a, n + p);
    Rational const ratio    = welfare_ratio(instance, truthful_profile(instance), NodeSet{"a"});
    std::cout << "  " << to_string(p) << "\t" << to_string(ratio) << "\t" << to_string((v_a - m) / (v_a - m + p))
              << "\t\t\t" << to_string(welfare_ratio(instance, Mechanism::rsm)) << "\n";
  }
  return kExitOk;
}

int cmd_demo(std::string const &name)
{
  if (name == "bird-manipulation")
  {
    return demo_bird();
  }
  if (name == "impossibility-bb")
  {
    return demo_bb();
  }
  if (name == "impossibility-bbr")
  {
    return demo_bbr();
  }
  if (name == "welfare-ratio-collapse")
  {
    return demo_welfare();
  }
  throw InputError("unknown demo '" + name + "'");
}

int cmd_gen(GenOptions const &gen, std::string const &out)
{
  std::string const text = serialize_instance(generate_instance(gen.params()));
  if (out.empty() || out == "-")
  {
    std::cout << text << "\n";
    return kExitOk;
  }
  std::ofstream file(out);
  if (!file)
  {
    throw InputError("cannot write '" + out + "'");
  }
  file << text << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Cost sharing on networks: mechanisms and property checks"};
  app.require_subcommand(1);

  std::string mechanism = "cvm";
  bool        trace     = false;
  Variants    variants;
  Source      source;

  auto *solve = app.add_subcommand("solve", "run a mechanism on an instance");
  solve->add_option("--mechanism,-m", mechanism, "cvm, rsm or bird")->required();
  source.attach(solve);
  solve->add_flag("--trace", trace, "include RSM stage records");
  variants.attach(solve);

  std::string property = "all";
  std::size_t instances = 20;
  std::size_t samples   = 200;
  std::string step      = "1/2";
  GenOptions  check_gen;
  auto *check = app.add_subcommand("check", "check a property on an instance or a generated corpus");
  check->add_option("--property,-p", property, "property name or 'all'")->capture_default_str();
  check->add_option("--mechanism,-m", mechanism, "cvm, rsm or bird")->capture_default_str();
  source.attach(check);
  check_gen.attach(check);
  check->add_option("--instances", instances, "corpus size when no instance is given")->capture_default_str();
  check->add_option("--samples", samples, "sampled report profiles per check")->capture_default_str();
  check->add_option("--grid-step", step, "valuation deviation step")->capture_default_str();
  variants.attach(check);

  std::string demo_name;
  auto *demo = app.add_subcommand("demo", "print a built-in demonstration");
  demo->add_option("name", demo_name, "bird-manipulation, impossibility-bb, impossibility-bbr, welfare-ratio-collapse")
      ->required();

  GenOptions  gen;
  std::string out;
  auto *gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen.attach(gen_cmd);
  gen_cmd->add_option("--out,-o", out, "output path (default: standard output)");

  auto *list = app.add_subcommand("fixtures", "list embedded instances");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitInput;
  }

  try
  {
    if (*solve)
    {
      return cmd_solve(mechanism, source, trace, variants);
    }
    if (*check)
    {
      return cmd_check(property, mechanism, source, check_gen, instances, samples, step, variants);
    }
    if (*demo)
    {
      return cmd_demo(demo_name);
    }
    if (*gen_cmd)
    {
      return cmd_gen(gen, out);
    }
    if (*list)
    {
      for (auto const &name : fixtures::names())
      {
        std::cout << name << "\n";
      }
      return kExitOk;
    }
  }
  catch (SizeCapError const &e)
  {
    std::cerr << "netshare: " << e.what() << "\n";
    return kExitSizeCap;
  }
  catch (InputError const &e)
  {
    std::cerr << "netshare: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
