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

#include "adequate/json_io.hpp"

#include <utility>

namespace adequate {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

TreeNode node_from_json(const json& j) {
  if (!j.is_array()) bad("tree node must be an array: " + j.dump());
  TreeNode node;
  for (const json& x : j) {
    if (!x.is_number_unsigned()) bad("tree node entries are naturals");
    node.push_back(x.get<std::uint32_t>());
  }
  return node;
}

json to_json(const TreeNode& node) {
  json out = json::array();
  for (std::uint32_t x : node) out.push_back(x);
  return out;
}

std::vector<TreeNode> nodes_from_json(const json& j) {
  if (!j.is_array()) bad("expected a list of tree nodes");
  std::vector<TreeNode> out;
  for (const json& x : j) out.push_back(node_from_json(x));
  return out;
}

json to_json(const std::vector<TreeNode>& nodes) {
  json out = json::array();
  for (const TreeNode& n : nodes) out.push_back(to_json(n));
  return out;
}

Enumeration enumeration_from_json(const json& j) {
  return Enumeration{nodes_from_json(j)};
}

json to_json(const Enumeration& e) { return to_json(e.order); }

json to_json(const QuotientTree& q) {
  json meets = json::array();
  for (const auto& m : q.meets) {
    meets.push_back(json::array({to_json(m.x), to_json(m.y), to_json(m.meet)}));
  }
  return json{{"nodes", to_json(q.nodes)}, {"meets", meets}};
}

ModelIndex model_from_json(const Fragment& frag, const json& j) {
  if (j.is_string()) {
    const auto m = frag.find_id(j.get<std::string>());
    if (!m) bad("unknown model id " + j.dump());
    return *m;
  }
  if (!j.is_array()) bad("model must be an id or a list of atoms");
  AtomSet carrier = 0;
  for (const json& x : j) {
    if (!x.is_string()) bad("atom names are strings");
    const auto a = frag.instance().atom_by_name(x.get<std::string>());
    if (!a) bad("unknown atom " + x.dump());
    carrier |= singleton(*a);
  }
  std::optional<ModelIndex> found;
  for (ModelIndex m = 0; m < frag.size(); ++m) {
    if (frag.model(m).carrier() != carrier) continue;
    if (found) bad("carrier " + j.dump() + " names several models; use ids");
    found = m;
  }
  if (!found) bad("no fragment member on " + j.dump());
  return *found;
}

json model_to_json(const Fragment& frag, ModelIndex m) {
  json atoms = json::array();
  for (Atom a : atoms_of(frag.model(m).carrier())) {
    atoms.push_back(frag.instance().atom_name(a));
  }
  return json{{"id", frag.id(m)}, {"atoms", atoms}};
}

LooseTree loose_tree_from_json(std::shared_ptr<const Fragment> frag,
                               const json& j) {
  const std::vector<TreeNode> nodes = nodes_from_json(field(j, "tree"));
  TreeShape shape = TreeShape::of(Tree::validate(nodes));
  std::vector<ModelIndex> assign(shape.size());
  std::vector<bool> seen(shape.size(), false);
  const json& a = field(j, "assign");
  auto put = [&](const TreeNode& node, const json& ref) {
    const auto i = shape.index_of(node);
    if (!i) bad("assignment to a node outside the tree");
    assign[*i] = model_from_json(*frag, ref);
    seen[*i] = true;
  };
  if (a.is_array()) {
    if (a.size() != nodes.size()) bad("assign list length differs from tree");
    for (std::size_t k = 0; k < nodes.size(); ++k) put(nodes[k], a[k]);
  } else if (a.is_object()) {
    for (const auto& [key, ref] : a.items()) {
      json parsed;
      try {
        parsed = json::parse(key);
      } catch (const json::parse_error&) {
        bad("bad node key " + key);
      }
      put(node_from_json(parsed), ref);
    }
  } else {
    bad("assign must be a list or an object");
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) bad("node " + to_string(shape.node(i)) + " unassigned");
  }
  const ModelIndex ambient = model_from_json(*frag, field(j, "ambient"));
  return make_loose_tree(std::move(frag), std::move(shape), std::move(assign),
                         ambient);
}

json to_json(const LooseTree& lt) {
  json assign = json::object();
  for (std::size_t i = 0; i < lt.shape.size(); ++i) {
    assign[to_string(lt.shape.node(i))] = lt.frag->id(lt.assign[i]);
  }
  return json{{"tree", to_json(lt.shape.nodes())},
              {"assign", assign},
              {"ambient", lt.frag->id(lt.ambient)}};
}

WitnessSequence witness_from_json(const LooseTree& lt, const json& j) {
  const Enumeration e = enumeration_from_json(field(j, "enumeration"));
  WitnessSequence w;
  for (const TreeNode& n : e.order) {
    const auto i = lt.shape.index_of(n);
    if (!i) bad("enumeration node " + to_string(n) + " not in tree");
    w.order.push_back(*i);
  }
  const json& models = field(j, "models");
  if (!models.is_array()) bad("witness models must be a list");
  for (const json& m : models) w.models.push_back(model_from_json(*lt.frag, m));
  return w;
}

json to_json(const LooseTree& lt, const WitnessSequence& w) {
  json models = json::array();
  for (ModelIndex m : w.models) models.push_back(lt.frag->id(m));
  return json{{"enumeration", to_json(to_enumeration(lt.shape, w.order))},
              {"models", models}};
}

}  // namespace adequate
