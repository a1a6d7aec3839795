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

// Index trees: prefix-closed sets of natural-number sequences, their
// enumerations (linear extensions), adjacent-transposition paths between
// enumerations, ideals and quotient trees.

#ifndef ADEQUATE_TREE_HPP_
#define ADEQUATE_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adequate {

using TreeNode = std::vector<std::uint32_t>;

std::string to_string(const TreeNode& node);

enum class TreeErrc {
  kMissingPrefix,
  kHeightExceeded,
  kBranchingExceeded,
  kNodeNotInTree,
  kRootHasNoPredecessor,
  kBoundExceeded,
  kDifferentTrees,
  kNotAnEnumeration,
  kNotAnIdeal,
};

const char* to_string(TreeErrc code);

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  TreeErrc code() const { return code_; }

 private:
  TreeErrc code_;
};

struct TreeBounds {
  // Every path must be strictly shorter than this (height <= 4 by default).
  std::size_t height = 5;
  // Every coordinate must be strictly smaller than this.
  std::uint32_t branching = 4;
  // Largest tree for which enumerations are listed.
  std::size_t max_nodes = 8;
};

// A prefix-closed finite set of sequences. Nodes are kept in lexicographic
// order; a node's position in that order is its index.
class Tree {
 public:
  static Tree validate(std::vector<TreeNode> nodes,
                       const TreeBounds& bounds = {});

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(std::size_t index) const { return nodes_.at(index); }
  bool contains(const TreeNode& node) const;
  std::optional<std::size_t> index_of(const TreeNode& node) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}
  std::vector<TreeNode> nodes_;
};

TreeNode meet(const Tree& tree, const TreeNode& s, const TreeNode& t);
TreeNode predecessor(const Tree& tree, const TreeNode& t);

// An ordering of all nodes of a tree in which every node comes after its
// proper prefixes.
struct Enumeration {
  std::vector<TreeNode> order;
  friend bool operator==(const Enumeration&, const Enumeration&) = default;
};

using Ideal = std::vector<TreeNode>;

// The tree (T - I) + {root} with the meet of x and y collapsed to the root
// whenever their meet in T lies in I.
struct QuotientTree {
  struct MeetEntry {
    TreeNode x;
    TreeNode y;
    TreeNode meet;
    friend bool operator==(const MeetEntry&, const MeetEntry&) = default;
  };
  std::vector<TreeNode> nodes;     // lexicographic order, root first
  std::vector<MeetEntry> meets;    // one entry per unordered pair, x <= y

  const TreeNode& meet(const TreeNode& x, const TreeNode& y) const;
};

// A rooted index tree given by a node set that contains the root, with the
// tree order read off as "longest proper prefix present in the set". Trees,
// quotient trees and trees with an omitted node all fit this shape; the
// loose-tree engine works over it.
class TreeShape {
 public:
  static TreeShape of(const Tree& tree);
  static TreeShape of(const QuotientTree& quotient);
  static TreeShape from_nodes(std::vector<TreeNode> nodes);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(std::size_t index) const { return nodes_.at(index); }
  std::optional<std::size_t> index_of(const TreeNode& node) const;
  std::size_t require_index(const TreeNode& node) const;

  // Parent index; nullopt for the root.
  std::optional<std::size_t> parent(std::size_t index) const;
  // Bit j set iff node j lies strictly below node `index`.
  std::uint64_t strict_ancestors(std::size_t index) const {
    return ancestors_[index];
  }
  bool strictly_below(std::size_t lower, std::size_t upper) const {
    return (ancestors_[upper] >> lower) & 1U;
  }
  bool comparable(std::size_t a, std::size_t b) const {
    return a == b || strictly_below(a, b) || strictly_below(b, a);
  }
  std::size_t meet(std::size_t a, std::size_t b) const;

  friend bool operator==(const TreeShape&, const TreeShape&) = default;

 private:
  TreeShape() = default;
  void index();

  std::vector<TreeNode> nodes_;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint64_t> ancestors_;
};

using IndexOrder = std::vector<std::size_t>;

bool is_enumeration(const TreeShape& shape, const IndexOrder& order);
bool is_enumeration(const Tree& tree, const Enumeration& e);

// All enumerations in lexicographic order of their node-index sequences.
std::vector<IndexOrder> all_enumeration_orders(const TreeShape& shape,
                                               std::size_t bound = 8);
std::vector<Enumeration> all_enumerations(const Tree& tree,
                                          std::size_t bound = 8);
std::vector<Enumeration> all_enumerations(const TreeShape& shape,
                                          std::size_t bound = 8);

IndexOrder to_indices(const TreeShape& shape, const Enumeration& e);
Enumeration to_enumeration(const TreeShape& shape, const IndexOrder& order);

// Returns the swap position i if e1 and e2 differ exactly by exchanging
// positions i and i+1 and both are enumerations; nullopt otherwise.
std::optional<std::size_t> close_neighbor_index(const Tree& tree,
                                                const Enumeration& e1,
                                                const Enumeration& e2);
bool is_close_neighbor(const Tree& tree, const Enumeration& e1,
                       const Enumeration& e2);

// Adjacent-transposition positions taking e1 to e2 through enumerations
// only. Greedy: extend the agreeing prefix by bubbling the next node of e2
// leftward.
std::vector<std::size_t> neighbor_path(const TreeShape& shape,
                                       const IndexOrder& from,
                                       const IndexOrder& to);
std::vector<std::size_t> neighbor_path(const Tree& tree,
                                       const Enumeration& e1,
                                       const Enumeration& e2);

// Number of node pairs ordered differently by the two enumerations.
std::size_t inversion_distance(const IndexOrder& a, const IndexOrder& b);

bool is_ideal(const Tree& tree, const std::vector<TreeNode>& subset);
bool is_ideal(const TreeShape& shape, std::uint64_t member_mask);
QuotientTree quotient(const Tree& tree, const Ideal& ideal);

// Every prefix-closed subset of the shape, as bit masks over node indices,
// in increasing mask order. Includes the empty ideal.
std::vector<std::uint64_t> all_ideals(const TreeShape& shape);

}  // namespace adequate

#endif  // ADEQUATE_TREE_HPP_
