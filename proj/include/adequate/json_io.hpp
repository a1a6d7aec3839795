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

// JSON forms of trees, enumerations, models and loose trees.
//   tree         [[], [0], [1], [1,0]]
//   model ref    "m3"  or  ["a","b"] (atom names; carrier must be unique)
//   loose tree   {"tree": ..., "assign": {"[]": "m0", "[0]": ["a"]},
//                 "ambient": "m15"}
//                assign may also be a list parallel to "tree".
//   witness      {"enumeration": [[],[0]], "models": ["m0", "m1"]}
// Malformed input raises ParseError.

#ifndef ADEQUATE_JSON_IO_HPP_
#define ADEQUATE_JSON_IO_HPP_

#include <memory>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "adequate/fragment.hpp"
#include "adequate/loose_tree.hpp"
#include "adequate/tree.hpp"

namespace adequate {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TreeNode node_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TreeNode& node);
std::vector<TreeNode> nodes_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<TreeNode>& nodes);

Enumeration enumeration_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Enumeration& e);
nlohmann::json to_json(const QuotientTree& q);

ModelIndex model_from_json(const Fragment& frag, const nlohmann::json& j);
// {"id": "m3", "atoms": ["a", "b"]}
nlohmann::json model_to_json(const Fragment& frag, ModelIndex m);

LooseTree loose_tree_from_json(std::shared_ptr<const Fragment> frag,
                               const nlohmann::json& j);
nlohmann::json to_json(const LooseTree& lt);

WitnessSequence witness_from_json(const LooseTree& lt,
                                  const nlohmann::json& j);
nlohmann::json to_json(const LooseTree& lt, const WitnessSequence& w);

}  // namespace adequate

#endif  // ADEQUATE_JSON_IO_HPP_
