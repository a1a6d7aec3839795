// Copyright 2026 The Authors.
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

#include "adequate/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "adequate/checkers.hpp"
#include "adequate/instances.hpp"
#include "adequate/json_io.hpp"
#include "adequate/loose_tree.hpp"
#include "adequate/tree.hpp"

namespace adequate::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string replay;
  std::string groups;
  std::optional<int> lambda;
  std::size_t bound = 8;
};

// Thrown for anything that is the caller's fault: exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--config is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InstanceError(InstanceErrc::kConfigParse,
                        path + ": " + std::string(e.what()));
  }
}

const json& require(const json& config, const char* key) {
  if (!config.is_object() || !config.contains(key)) {
    throw InstanceError(InstanceErrc::kConfigParse,
                        std::string("config lacks \"") + key + "\"");
  }
  return config.at(key);
}

// A config is either an instance description or an object holding one
// under "instance".
json instance_config(const json& config) {
  if (config.is_object() && config.contains("kind")) return config;
  return require(config, "instance");
}

std::shared_ptr<const Fragment> fragment_for(const json& instance) {
  return std::make_shared<const Fragment>(make_instance(instance));
}

int emit(const Options& o, const json& report, std::ostream& out, int code) {
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.out);
    file << text;
  }
  return code;
}

std::vector<std::string> split_groups(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------
// check-axioms

int check_axioms(const Options& o, std::ostream& out) {
  if (!o.replay.empty()) {
    const json recorded = read_json(o.replay);
    const AxiomReport report = report_from_json(recorded);
    const auto frag = fragment_for(report.instance);
    json rows = json::array();
    bool consistent = true;
    bool any_fail = false;
    for (const AxiomEntry& e : report.entries) {
      if (e.counterexample.empty() && e.unresolved.empty()) continue;
      const Verdict v = replay_entry(*frag, e);
      consistent = consistent && v == e.verdict;
      any_fail = any_fail || (v == Verdict::kFail && e.required);
      rows.push_back(json{{"axiom", e.axiom},
                          {"recorded", to_string(e.verdict)},
                          {"replayed", to_string(v)}});
    }
    const json body{{"instance", report.instance},
                    {"replay", rows},
                    {"consistent", consistent}};
    return emit(o, body, out, any_fail || !consistent ? kExitFalse : kExitPass);
  }
  const json config = read_json(o.config);
  const json instance = instance_config(config);
  std::vector<std::string> groups = default_groups();
  if (!o.groups.empty()) {
    groups = split_groups(o.groups);
  } else if (config.is_object() && config.contains("groups")) {
    groups = config.at("groups").get<std::vector<std::string>>();
  }
  std::optional<int> lambda = o.lambda;
  if (!lambda && config.is_object() && config.contains("lambda")) {
    lambda = config.at("lambda").get<int>();
  }
  const auto frag = fragment_for(instance);
  AxiomReport report = run_groups(*frag, groups, lambda);
  report.instance = instance;
  return emit(o, to_json(report), out,
              report.has_fail() ? kExitFalse : kExitPass);
}

// ---------------------------------------------------------------------------
// tree

int tree_command(const std::string& sub, const Options& o, std::ostream& out) {
  const json config = read_json(o.config);
  const Tree tree = Tree::validate(nodes_from_json(require(config, "tree")));
  if (sub == "enumerate") {
    json list = json::array();
    const auto all = all_enumerations(tree, o.bound);
    for (const Enumeration& e : all) list.push_back(to_json(e));
    return emit(o, json{{"count", all.size()}, {"enumerations", list}}, out,
                kExitPass);
  }
  if (sub == "neighbors") {
    const Enumeration e1 = enumeration_from_json(require(config, "e1"));
    const Enumeration e2 = enumeration_from_json(require(config, "e2"));
    const auto path = neighbor_path(tree, e1, e2);
    return emit(o, json{{"path", path}, {"length", path.size()}}, out,
                kExitPass);
  }
  const Ideal ideal = nodes_from_json(require(config, "ideal"));
  return emit(o, to_json(quotient(tree, ideal)), out, kExitPass);
}

// ---------------------------------------------------------------------------
// loose-tree

IndexOrder order_from(const LooseTree& lt, const json& config) {
  if (!config.contains("enumeration")) {
    return all_enumeration_orders(lt.shape, 64).front();
  }
  return to_indices(lt.shape,
                    enumeration_from_json(config.at("enumeration")));
}

WitnessSequence witness_from(const LooseTree& lt, const json& config) {
  if (config.contains("witness")) {
    return witness_from_json(lt, config.at("witness"));
  }
  const auto w = find_witness(lt, order_from(lt, config));
  if (!w) throw LooseTreeError(LooseTreeErrc::kNotFree, "no witness");
  return *w;
}

json free_json(const FreeReport& r) {
  return json{{"free", r.free_count > 0},
              {"enumerations_checked", r.orders.size()},
              {"free_count", r.free_count},
              {"agree", r.agree}};
}

int loose_tree_command(const std::string& sub, const Options& o,
                       std::ostream& out) {
  const json config = read_json(o.config);
  const json instance = instance_config(config);
  const auto frag = fragment_for(instance);
  json body{{"instance", instance}, {"command", sub}};
  try {
    const LooseTree lt = loose_tree_from_json(frag, require(config, "loose_tree"));
    body["loose_tree"] = to_json(lt);
    if (sub == "validate") {
      body["valid"] = true;
      bool ok = true;
      if (config.contains("witness")) {
        const WitnessCheck c =
            validate_witness(lt, witness_from_json(lt, config.at("witness")));
        body["witness"] = json{{"basic", c.basic},
                               {"refined", c.refined},
                               {"failure", c.failure},
                               {"refined_failure", c.refined_failure}};
        ok = c.basic;
      }
      return emit(o, body, out, ok ? kExitPass : kExitFalse);
    }
    if (sub == "free") {
      const FreeReport r = check_free_all_enumerations(lt, o.bound);
      body.update(free_json(r));
      return emit(o, body, out, r.free_count > 0 ? kExitPass : kExitFalse);
    }
    if (sub == "prime") {
      const IndexOrder order = order_from(lt, config);
      const ModelIndex p = explicit_prime(lt, order);
      body["prime"] = model_to_json(*frag, p);
      body["witness"] = to_json(lt, *find_witness(lt, order));
      return emit(o, body, out, kExitPass);
    }
    if (sub == "swap") {
      const WitnessSequence w = witness_from(lt, config);
      const auto i = require(config, "position").get<std::size_t>();
      const WitnessSequence next = swap_transform(lt, w, i);
      body["witness"] = to_json(lt, next);
      body["valid"] = true;
      return emit(o, body, out, kExitPass);
    }
    if (sub == "omit") {
      const WitnessSequence w = witness_from(lt, config);
      const TreeNode r = node_from_json(require(config, "node"));
      const OmissionResult res = omission_transform(lt, w, r);
      body["result"] = to_json(res.tree);
      body["witness"] = to_json(res.tree, res.witness);
      body["swaps"] = res.swaps;
      body["valid"] = true;
      return emit(o, body, out, kExitPass);
    }
    if (sub == "quotient-check") {
      const Ideal ideal = nodes_from_json(require(config, "ideal"));
      const QuotientReport q = quotient_check(lt, ideal, o.bound);
      json cases = json::array();
      for (const QuotientCase& c : q.cases) {
        json row{{"quotient_free", c.quotient_free}, {"extends", c.extends}};
        if (c.prime) row["prime"] = frag->id(*c.prime);
        if (c.full_witness) row["witness"] = to_json(lt, *c.full_witness);
        cases.push_back(row);
      }
      body["cases"] = cases;
      body["pass"] = q.pass;
      return emit(o, body, out, q.pass ? kExitPass : kExitFalse);
    }
    // conclusion
    const ConclusionReport c = check_conclusion(lt, o.bound);
    body["verdict"] = to_string(c.verdict);
    body.update(free_json(c.freeness));
    if (c.prime) body["prime"] = model_to_json(*frag, *c.prime);
    if (c.lfp.refuting) body["refuting"] = frag->id(*c.lfp.refuting);
    body["extensions_checked"] = c.lfp.extensions_checked;
    body["note"] = c.note;
    return emit(o, body, out,
                c.verdict == Verdict::kFail ? kExitFalse : kExitPass);
  } catch (const LooseTreeError& e) {
    body["error"] = to_string(e.code());
    body["message"] = e.what();
    return emit(o, body, out, kExitFalse);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bounded checks for abstract independence on finite fragments",
               "adequate"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "JSON config");
    cmd->add_option("--out", o.out, "write the report here");
    cmd->add_option("--bound", o.bound, "largest tree to enumerate")
        ->check(CLI::Range(1, 12));
  };
  auto* axioms = app.add_subcommand("check-axioms", "run axiom checkers");
  common(axioms);
  axioms->add_option("--replay", o.replay, "replay a saved report");
  axioms->add_option("--groups", o.groups, "comma list: A,C,P,D,T,Ch");
  axioms->add_option("--lambda", o.lambda, "bound for A4");

  auto* tree = app.add_subcommand("tree", "tree utilities");
  tree->require_subcommand(1);
  std::string sub;
  for (const char* name : {"enumerate", "neighbors", "quotient"}) {
    common(tree->add_subcommand(name)->final_callback(
        [&sub, name] { sub = name; }));
  }
  auto* loose = app.add_subcommand("loose-tree", "loose tree checks");
  loose->require_subcommand(1);
  for (const char* name : {"validate", "free", "prime", "swap", "omit",
                           "quotient-check", "conclusion"}) {
    common(loose->add_subcommand(name)->final_callback(
        [&sub, name] { sub = name; }));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (axioms->parsed()) return check_axioms(o, out);
    if (tree->parsed()) return tree_command(sub, o, out);
    return loose_tree_command(sub, o, out);
  } catch (const TreeError& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
  } catch (const InstanceError& e) {
    err << e.what() << "\n";
  } catch (const KernelError& e) {
    err << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "ConfigParse: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "ConfigParse: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace adequate::cli
