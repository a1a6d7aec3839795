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

// Exhaustive generators shared by the tests and the acceptance binary.

#ifndef ADEQUATE_TESTS_TREE_GEN_HPP_
#define ADEQUATE_TESTS_TREE_GEN_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "adequate/tree.hpp"

namespace adequate::testgen {

// Every tree with at most max_nodes nodes whose coordinates are below
// `branching`, grown by adding one child at a time. Labelled trees, so
// {[], [1]} and {[], [0]} are different.
inline std::vector<Tree> all_trees(std::size_t max_nodes,
                                   std::uint32_t branching) {
  std::set<std::vector<TreeNode>> seen;
  std::vector<std::vector<TreeNode>> frontier{{TreeNode{}}};
  seen.insert(frontier.front());
  for (std::size_t size = 1; size < max_nodes; ++size) {
    std::vector<std::vector<TreeNode>> next;
    for (const auto& nodes : frontier) {
      for (const TreeNode& parent : nodes) {
        for (std::uint32_t c = 0; c < branching; ++c) {
          TreeNode child = parent;
          child.push_back(c);
          std::set<TreeNode> grown(nodes.begin(), nodes.end());
          if (!grown.insert(child).second) continue;
          std::vector<TreeNode> v(grown.begin(), grown.end());
          if (seen.insert(v).second) next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Tree> out;
  for (const auto& nodes : seen) out.push_back(Tree::validate(nodes));
  return out;
}

}  // namespace adequate::testgen

#endif  // ADEQUATE_TESTS_TREE_GEN_HPP_
