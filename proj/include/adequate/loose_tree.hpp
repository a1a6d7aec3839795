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

// Loose trees of fragment members inside an explicit ambient model,
// witnessing sequences for freeness, explicit primes and the
// transformations that move between enumerations and trees.

#ifndef ADEQUATE_LOOSE_TREE_HPP_
#define ADEQUATE_LOOSE_TREE_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adequate/diagram.hpp"
#include "adequate/fragment.hpp"
#include "adequate/report.hpp"
#include "adequate/tree.hpp"

namespace adequate {

enum class LooseTreeErrc {
  kIntersectionNotMember,
  kIntersectionNotSubmodel,
  kNotInAmbient,
  kAssignmentMismatch,
  kEnumerationMismatch,
  kNotFree,
  kNodesComparable,
  kNoPrimeInFragment,
  kPreconditionFailed,
  kValidationFailed,
  kIntersectionCondition,
  kBoundExceeded,
  kNotAnIdeal,
};

const char* to_string(LooseTreeErrc code);

class LooseTreeError : public std::runtime_error {
 public:
  LooseTreeError(LooseTreeErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}
  LooseTreeErrc code() const { return code_; }

 private:
  LooseTreeErrc code_;
};

struct LooseTree {
  std::shared_ptr<const Fragment> frag;
  TreeShape shape;
  std::vector<ModelIndex> assign;  // by shape index
  ModelIndex ambient;

  ModelIndex at(std::size_t index) const { return assign.at(index); }
  ModelIndex at(const TreeNode& node) const {
    return assign.at(shape.require_index(node));
  }
  // M_t intersected with M_{t^-}; t must not be the root.
  ModelIndex edge_base(std::size_t index) const;
};

// Validates the intersection conditions along every edge and that every
// model lies below the ambient.
LooseTree make_loose_tree(std::shared_ptr<const Fragment> frag,
                          TreeShape shape, std::vector<ModelIndex> assign,
                          ModelIndex ambient);

struct WitnessSequence {
  std::vector<ModelIndex> models;
  IndexOrder order;
};

struct WitnessCheck {
  bool basic = false;    // conditions (i)-(iv)
  bool refined = false;  // basic, and each N_i prime over M_{t_i} + N_{i-1}
  std::string failure;          // first violated basic clause
  std::string refined_failure;  // first position where primality fails
};

// Throws EnumerationMismatch when the order does not enumerate lt's tree.
WitnessCheck validate_witness(const LooseTree& lt, const WitnessSequence& w);

// Greedy: N_0 = M_{t_0}, then N_i prime over the vee
// (M_{t_i} meet M_{t_i^-}, M_{t_i}, N_{i-1}) inside the ambient, provided
// that vee is free there.
std::optional<WitnessSequence> find_witness(const LooseTree& lt,
                                            const IndexOrder& order);
// Continues a witness for an initial segment of `order`.
std::optional<WitnessSequence> extend_witness(const LooseTree& lt,
                                              const IndexOrder& order,
                                              const WitnessSequence& prefix);

struct AlmostFreeWitness {
  WitnessSequence witness;
  ModelIndex ambient;
};
// As find_witness, but may move to a larger ambient from the fragment.
std::optional<AlmostFreeWitness> find_almost_free_witness(
    const LooseTree& lt, const IndexOrder& order);

bool is_free(const LooseTree& lt, const IndexOrder& order);
// Free under some enumeration.
bool is_free(const LooseTree& lt);

struct FreeReport {
  std::vector<IndexOrder> orders;
  std::vector<bool> free;
  std::size_t free_count = 0;
  bool agree = true;  // all true or all false
};
FreeReport check_free_all_enumerations(const LooseTree& lt,
                                       std::size_t bound = 8);

// The last witness model; throws NotFree.
ModelIndex explicit_prime(const LooseTree& lt, const IndexOrder& order);

// p and q are isomorphic by a map fixing every M_t pointwise, checked with
// an embedding search in each direction.
bool isomorphic_over_tree(const LooseTree& lt, ModelIndex p, ModelIndex q);

// Positions i, i+1 of w's enumeration are exchanged.
WitnessSequence swap_transform(const LooseTree& lt, const WitnessSequence& w,
                               std::size_t i);

struct OmissionResult {
  LooseTree tree;
  WitnessSequence witness;
  std::vector<std::size_t> swaps;  // re-enumeration steps applied first
};
OmissionResult omission_transform(const LooseTree& lt,
                                  const WitnessSequence& w,
                                  const TreeNode& r);

// M(N/s); throws IntersectionCondition or NotInAmbient.
LooseTree substitute(const LooseTree& lt, const TreeNode& s, ModelIndex n);

struct SubstitutionReport {
  bool vee_free = false;
  std::optional<ModelIndex> prime;
  FreeReport freeness;
  bool pass = false;
  std::string note;
};
SubstitutionReport substitute_prime_node_check(const LooseTree& lt,
                                               const TreeNode& v);

// The restriction to a prefix-closed set of shape indices.
LooseTree restrict_to(const LooseTree& lt, std::uint64_t mask);

struct QuotientCase {
  IndexOrder ideal_order;  // in the restricted tree's indices
  std::optional<ModelIndex> prime;
  bool quotient_free = false;  // (a)
  bool extends = false;        // (b)
  std::optional<WitnessSequence> full_witness;
};
struct QuotientReport {
  std::vector<QuotientCase> cases;
  bool pass = false;
  std::string note;
};
// Runs every enumeration of the ideal. Throws NotFree, NotAnIdeal.
QuotientReport quotient_check(const LooseTree& lt, const Ideal& ideal,
                              std::size_t bound = 8);
QuotientReport quotient_check(const LooseTree& lt, std::uint64_t ideal_mask,
                              std::size_t bound = 8);

// Every nonempty ideal restricts to a free loose tree. Throws BoundExceeded
// beyond `bound` nodes.
bool is_locally_free(const LooseTree& lt, std::size_t bound = 6);

// Bounded LFP: the tree is locally free inside m, and for every fragment
// member N and union-consistent embedding g of the tree into N whose image
// is locally free and compatible with m, some h : m -> N has h = g on
// every M_t. Families whose maps disagree on a shared atom are skipped:
// they can never be compatible with inclusions.
PrimalityResult lfp_check(const LooseTree& lt, ModelIndex m);

struct ConclusionReport {
  Verdict verdict = Verdict::kPass;
  bool free = false;
  FreeReport freeness;
  std::optional<ModelIndex> prime;
  PrimalityResult lfp;
  std::string note;
};
ConclusionReport check_conclusion(const LooseTree& lt, std::size_t bound = 8);

}  // namespace adequate

#endif  // ADEQUATE_LOOSE_TREE_HPP_
