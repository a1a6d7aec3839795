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

#include "adequate/tree.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace adequate {
namespace {

bool is_proper_prefix(const TreeNode& prefix, const TreeNode& node) {
  return prefix.size() < node.size() &&
         std::equal(prefix.begin(), prefix.end(), node.begin());
}

TreeNode common_prefix(const TreeNode& s, const TreeNode& t) {
  const auto [s_end, t_end] =
      std::mismatch(s.begin(), s.end(), t.begin(), t.end());
  return TreeNode(s.begin(), s_end);
}

void sort_unique(std::vector<TreeNode>& nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

[[noreturn]] void fail(TreeErrc code, const std::string& detail) {
  throw TreeError(code, std::string(to_string(code)) + ": " + detail);
}

}  // namespace

std::string to_string(const TreeNode& node) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (i > 0) out << ',';
    out << node[i];
  }
  out << ']';
  return out.str();
}

const char* to_string(TreeErrc code) {
  switch (code) {
    case TreeErrc::kMissingPrefix: return "MissingPrefix";
    case TreeErrc::kHeightExceeded: return "HeightExceeded";
    case TreeErrc::kBranchingExceeded: return "BranchingExceeded";
    case TreeErrc::kNodeNotInTree: return "NodeNotInTree";
    case TreeErrc::kRootHasNoPredecessor: return "RootHasNoPredecessor";
    case TreeErrc::kBoundExceeded: return "BoundExceeded";
    case TreeErrc::kDifferentTrees: return "DifferentTrees";
    case TreeErrc::kNotAnEnumeration: return "NotAnEnumeration";
    case TreeErrc::kNotAnIdeal: return "NotAnIdeal";
  }
  return "TreeError";
}

// ---------------------------------------------------------------------------
// Tree

Tree Tree::validate(std::vector<TreeNode> nodes, const TreeBounds& bounds) {
  sort_unique(nodes);
  for (const TreeNode& node : nodes) {
    if (node.size() >= bounds.height) {
      fail(TreeErrc::kHeightExceeded, to_string(node));
    }
    for (std::uint32_t coordinate : node) {
      if (coordinate >= bounds.branching) {
        fail(TreeErrc::kBranchingExceeded, to_string(node));
      }
    }
  }
  for (const TreeNode& node : nodes) {
    for (std::size_t len = 0; len < node.size(); ++len) {
      TreeNode prefix(node.begin(), node.begin() + len);
      if (!std::binary_search(nodes.begin(), nodes.end(), prefix)) {
        fail(TreeErrc::kMissingPrefix,
             to_string(node) + ", " + to_string(prefix));
      }
    }
  }
  return Tree(std::move(nodes));
}

bool Tree::contains(const TreeNode& node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

std::optional<std::size_t> Tree::index_of(const TreeNode& node) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

TreeNode meet(const Tree& tree, const TreeNode& s, const TreeNode& t) {
  if (!tree.contains(s)) fail(TreeErrc::kNodeNotInTree, to_string(s));
  if (!tree.contains(t)) fail(TreeErrc::kNodeNotInTree, to_string(t));
  return common_prefix(s, t);
}

TreeNode predecessor(const Tree& tree, const TreeNode& t) {
  if (!tree.contains(t)) fail(TreeErrc::kNodeNotInTree, to_string(t));
  if (t.empty()) fail(TreeErrc::kRootHasNoPredecessor, "[]");
  return TreeNode(t.begin(), t.end() - 1);
}

const TreeNode& QuotientTree::meet(const TreeNode& x,
                                   const TreeNode& y) const {
  const TreeNode& lo = std::min(x, y);
  const TreeNode& hi = std::max(x, y);
  for (const MeetEntry& entry : meets) {
    if (entry.x == lo && entry.y == hi) return entry.meet;
  }
  fail(TreeErrc::kNodeNotInTree, to_string(x) + " or " + to_string(y));
}

// ---------------------------------------------------------------------------
// TreeShape

TreeShape TreeShape::of(const Tree& tree) {
  if (tree.empty()) fail(TreeErrc::kMissingPrefix, "empty tree has no root");
  return from_nodes(tree.nodes());
}

TreeShape TreeShape::from_nodes(std::vector<TreeNode> nodes) {
  sort_unique(nodes);
  if (nodes.empty() || !nodes.front().empty()) {
    fail(TreeErrc::kMissingPrefix, "node set lacks the root []");
  }
  if (nodes.size() > 64) fail(TreeErrc::kBoundExceeded, "more than 64 nodes");
  TreeShape shape;
  shape.nodes_ = std::move(nodes);
  const std::size_t n = shape.nodes_.size();
  shape.parent_.assign(n, -1);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t best_len = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_proper_prefix(shape.nodes_[j], shape.nodes_[i]) &&
          shape.nodes_[j].size() >= best_len) {
        best_len = shape.nodes_[j].size();
        shape.parent_[i] = static_cast<std::int32_t>(j);
      }
    }
  }
  shape.index();
  return shape;
}

TreeShape TreeShape::of(const QuotientTree& quotient) {
  std::vector<TreeNode> nodes = quotient.nodes;
  sort_unique(nodes);
  if (nodes.empty() || !nodes.front().empty()) {
    fail(TreeErrc::kMissingPrefix, "quotient lacks the root []");
  }
  if (nodes.size() > 64) fail(TreeErrc::kBoundExceeded, "more than 64 nodes");
  TreeShape shape;
  shape.nodes_ = std::move(nodes);
  const std::size_t n = shape.nodes_.size();
  shape.parent_.assign(n, -1);
  // a < b iff meet(a, b) = a; the parent is the largest strict lower bound.
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t best_depth = 0;
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const TreeNode& m = quotient.meet(shape.nodes_[j], shape.nodes_[i]);
      if (m != shape.nodes_[j]) continue;
      std::size_t depth = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j && quotient.meet(shape.nodes_[k], shape.nodes_[j]) ==
                          shape.nodes_[k]) {
          ++depth;
        }
      }
      if (!found || depth > best_depth) {
        found = true;
        best_depth = depth;
        shape.parent_[i] = static_cast<std::int32_t>(j);
      }
    }
  }
  shape.index();
  return shape;
}

void TreeShape::index() {
  const std::size_t n = nodes_.size();
  ancestors_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int32_t p = parent_[i]; p >= 0; p = parent_[p]) {
      ancestors_[i] |= std::uint64_t{1} << p;
    }
  }
}

std::optional<std::size_t> TreeShape::index_of(const TreeNode& node) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t TreeShape::require_index(const TreeNode& node) const {
  const auto index = index_of(node);
  if (!index) fail(TreeErrc::kNodeNotInTree, to_string(node));
  return *index;
}

std::optional<std::size_t> TreeShape::parent(std::size_t index) const {
  if (parent_.at(index) < 0) return std::nullopt;
  return static_cast<std::size_t>(parent_[index]);
}

std::size_t TreeShape::meet(std::size_t a, std::size_t b) const {
  const std::uint64_t common = (ancestors_[a] | std::uint64_t{1} << a) &
                               (ancestors_[b] | std::uint64_t{1} << b);
  // Lower bounds form a chain; the deepest has the most ancestors.
  std::size_t best = 0;
  int best_depth = -1;
  for (std::uint64_t rest = common; rest != 0; rest &= rest - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(rest));
    const int depth = std::popcount(ancestors_[j]);
    if (depth > best_depth) {
      best_depth = depth;
      best = j;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Enumerations

bool is_enumeration(const TreeShape& shape, const IndexOrder& order) {
  if (order.size() != shape.size()) return false;
  std::uint64_t placed = 0;
  for (std::size_t node : order) {
    if (node >= shape.size()) return false;
    const std::uint64_t bit = std::uint64_t{1} << node;
    if (placed & bit) return false;
    if ((shape.strict_ancestors(node) & ~placed) != 0) return false;
    placed |= bit;
  }
  return true;
}

IndexOrder to_indices(const TreeShape& shape, const Enumeration& e) {
  IndexOrder order;
  order.reserve(e.order.size());
  for (const TreeNode& node : e.order) {
    const auto index = shape.index_of(node);
    if (!index) fail(TreeErrc::kDifferentTrees, to_string(node));
    order.push_back(*index);
  }
  return order;
}

Enumeration to_enumeration(const TreeShape& shape, const IndexOrder& order) {
  Enumeration e;
  e.order.reserve(order.size());
  for (std::size_t index : order) e.order.push_back(shape.node(index));
  return e;
}

bool is_enumeration(const Tree& tree, const Enumeration& e) {
  if (tree.empty()) return e.order.empty();
  const TreeShape shape = TreeShape::of(tree);
  IndexOrder order;
  for (const TreeNode& node : e.order) {
    const auto index = shape.index_of(node);
    if (!index) return false;
    order.push_back(*index);
  }
  return is_enumeration(shape, order);
}

std::vector<IndexOrder> all_enumeration_orders(const TreeShape& shape,
                                               std::size_t bound) {
  const std::size_t n = shape.size();
  if (n > bound) {
    fail(TreeErrc::kBoundExceeded,
         std::to_string(n) + " nodes > bound " + std::to_string(bound));
  }
  std::vector<IndexOrder> out;
  IndexOrder current;
  current.reserve(n);
  auto extend = [&](auto&& self, std::uint64_t placed) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) || (shape.strict_ancestors(i) & ~placed)) continue;
      current.push_back(i);
      self(self, placed | bit);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Enumeration> all_enumerations(const TreeShape& shape,
                                          std::size_t bound) {
  std::vector<Enumeration> out;
  for (const IndexOrder& order : all_enumeration_orders(shape, bound)) {
    out.push_back(to_enumeration(shape, order));
  }
  return out;
}

std::vector<Enumeration> all_enumerations(const Tree& tree,
                                          std::size_t bound) {
  if (tree.empty()) fail(TreeErrc::kMissingPrefix, "empty tree");
  return all_enumerations(TreeShape::of(tree), bound);
}

namespace {

// Both must enumerate exactly the nodes of `tree`.
std::pair<IndexOrder, IndexOrder> same_tree_orders(const Tree& tree,
                                                   const Enumeration& e1,
                                                   const Enumeration& e2) {
  auto sorted = [](std::vector<TreeNode> nodes) {
    std::sort(nodes.begin(), nodes.end());
    return nodes;
  };
  if (sorted(e1.order) != tree.nodes() || sorted(e2.order) != tree.nodes()) {
    fail(TreeErrc::kDifferentTrees,
         "enumerations do not list the nodes of the same tree");
  }
  const TreeShape shape = TreeShape::of(tree);
  return {to_indices(shape, e1), to_indices(shape, e2)};
}

}  // namespace

std::optional<std::size_t> close_neighbor_index(const Tree& tree,
                                                const Enumeration& e1,
                                                const Enumeration& e2) {
  const auto [a, b] = same_tree_orders(tree, e1, e2);
  const TreeShape shape = TreeShape::of(tree);
  if (!is_enumeration(shape, a) || !is_enumeration(shape, b)) {
    return std::nullopt;
  }
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return std::nullopt;
  const std::size_t i = diff[0];
  if (a[i] != b[i + 1] || a[i + 1] != b[i]) return std::nullopt;
  return i;
}

bool is_close_neighbor(const Tree& tree, const Enumeration& e1,
                       const Enumeration& e2) {
  return close_neighbor_index(tree, e1, e2).has_value();
}

std::vector<std::size_t> neighbor_path(const TreeShape& shape,
                                       const IndexOrder& from,
                                       const IndexOrder& to) {
  if (from.size() != shape.size() || to.size() != shape.size()) {
    fail(TreeErrc::kDifferentTrees, "enumeration length differs from tree");
  }
  if (!is_enumeration(shape, from) || !is_enumeration(shape, to)) {
    fail(TreeErrc::kNotAnEnumeration, "neighbor_path endpoints");
  }
  std::vector<std::size_t> path;
  IndexOrder current = from;
  for (std::size_t k = 0; k < current.size(); ++k) {
    if (current[k] == to[k]) continue;
    // The least position l > k holding the node that `to` wants at k.
    std::size_t l = k + 1;
    while (current[l] != to[k]) ++l;
    for (; l > k; --l) {
      // Everything between k and l is incomparable with the moving node:
      // its ancestors all sit in the agreeing prefix.
      std::swap(current[l - 1], current[l]);
      path.push_back(l - 1);
    }
  }
  return path;
}

std::vector<std::size_t> neighbor_path(const Tree& tree,
                                       const Enumeration& e1,
                                       const Enumeration& e2) {
  const auto [a, b] = same_tree_orders(tree, e1, e2);
  return neighbor_path(TreeShape::of(tree), a, b);
}

std::size_t inversion_distance(const IndexOrder& a, const IndexOrder& b) {
  std::vector<std::size_t> position(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) position[b[i]] = i;
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (position[a[i]] > position[a[j]]) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Ideals and quotients

bool is_ideal(const Tree& tree, const std::vector<TreeNode>& subset) {
  for (const TreeNode& node : subset) {
    if (!tree.contains(node)) return false;
    for (std::size_t len = 0; len < node.size(); ++len) {
      const TreeNode prefix(node.begin(), node.begin() + len);
      if (std::find(subset.begin(), subset.end(), prefix) == subset.end()) {
        return false;
      }
    }
  }
  return true;
}

bool is_ideal(const TreeShape& shape, std::uint64_t member_mask) {
  for (std::uint64_t rest = member_mask; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if (i >= shape.size()) return false;
    if ((shape.strict_ancestors(i) & ~member_mask) != 0) return false;
  }
  return true;
}

QuotientTree quotient(const Tree& tree, const Ideal& ideal) {
  if (!is_ideal(tree, ideal)) {
    fail(TreeErrc::kNotAnIdeal, "subset is not a prefix-closed subset");
  }
  auto in_ideal = [&](const TreeNode& node) {
    return std::find(ideal.begin(), ideal.end(), node) != ideal.end();
  };
  QuotientTree q;
  q.nodes.push_back(TreeNode{});
  for (const TreeNode& node : tree.nodes()) {
    if (!node.empty() && !in_ideal(node)) q.nodes.push_back(node);
  }
  sort_unique(q.nodes);
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    for (std::size_t j = i; j < q.nodes.size(); ++j) {
      TreeNode m = common_prefix(q.nodes[i], q.nodes[j]);
      if (in_ideal(m)) m.clear();
      q.meets.push_back({q.nodes[i], q.nodes[j], std::move(m)});
    }
  }
  return q;
}

std::vector<std::uint64_t> all_ideals(const TreeShape& shape) {
  const std::size_t n = shape.size();
  if (n > 20) fail(TreeErrc::kBoundExceeded, "too many nodes to list ideals");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (is_ideal(shape, mask)) out.push_back(mask);
  }
  return out;
}

}  // namespace adequate
