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

#include <functional>
#include <memory>
#include <random>

#include "doctest.h"

#include "adequate/instances.hpp"
#include "adequate/loose_tree.hpp"

using namespace adequate;

namespace {

constexpr AtomSet A = 1, B = 2, C = 4, D = 8;

struct Ds {
  std::shared_ptr<DisjointSets> inst = std::make_shared<DisjointSets>(
      std::vector<std::string>{"a", "b", "c", "d"});
  std::shared_ptr<const Fragment> frag = std::make_shared<const Fragment>(inst);
  ModelIndex operator()(AtomSet s) const { return *frag->find(inst->set(s)); }
  LooseTree tree(std::vector<TreeNode> nodes, std::vector<AtomSet> sets,
                 AtomSet ambient) const {
    const TreeShape shape = TreeShape::of(Tree::validate(nodes));
    std::vector<ModelIndex> assign(shape.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      assign[shape.require_index(nodes[k])] = (*this)(sets[k]);
    }
    return make_loose_tree(frag, shape, assign, (*this)(ambient));
  }
};

struct Vs {
  std::shared_ptr<VectorSpaceF2> inst = std::make_shared<VectorSpaceF2>(3);
  std::shared_ptr<const Fragment> frag = std::make_shared<const Fragment>(inst);
  ModelIndex span(std::vector<unsigned> v) const {
    return *frag->find(inst->span(v));
  }
};

const std::vector<TreeNode> kThree{{}, {0}, {1}};
const std::vector<TreeNode> kFive{{}, {0}, {1}, {1, 0}, {1, 1}};

IndexOrder order_of(const LooseTree& lt, std::vector<TreeNode> nodes) {
  return to_indices(lt.shape, Enumeration{std::move(nodes)});
}

// Any sequence of fragment members meeting the basic conditions.
bool brute_free(const LooseTree& lt, const IndexOrder& order) {
  const Fragment& f = *lt.frag;
  std::vector<ModelIndex> seq{lt.assign[order[0]]};
  std::function<bool()> go = [&]() -> bool {
    const std::size_t i = seq.size();
    if (i == order.size()) return true;
    const std::size_t t = order[i];
    const auto base = f.intersect(lt.assign[t], lt.assign[*lt.shape.parent(t)]);
    for (ModelIndex n = 0; n < f.size(); ++n) {
      if (!f.sub(n, lt.ambient)) continue;
      if (!f.nf(*base, lt.assign[t], seq.back(), n)) continue;
      seq.push_back(n);
      if (go()) return true;
      seq.pop_back();
    }
    return false;
  };
  return go();
}

}  // namespace

TEST_CASE("loose tree construction") {
  const Ds ds;
  CHECK_NOTHROW(ds.tree(kThree, {0, A, B}, A | B));
  try {
    ds.tree(kThree, {0, A | C, B}, A | B);
    FAIL("expected NotInAmbient");
  } catch (const LooseTreeError& e) {
    CHECK(e.code() == LooseTreeErrc::kNotInAmbient);
  }
}

TEST_CASE("stable tree-indexed diagrams are loose trees") {
  const Ds ds;
  const Fragment& f = *ds.frag;
  const ModelIndex top = ds(A | B | C | D);
  std::size_t stable = 0;
  for (AtomSet r = 0; r < 16; ++r)
    for (AtomSet x = 0; x < 16; ++x)
      for (AtomSet y = 0; y < 16; ++y) {
        if (!subset_of(r, x) || !subset_of(r, y)) continue;
        if (!f.nf(ds(r), ds(x), ds(y), top)) continue;
        ++stable;
        CHECK_NOTHROW(ds.tree(kThree, {r, x, y}, A | B | C | D));
      }
  CHECK(stable > 0);
}

TEST_CASE("witness validation, basic and refined") {
  const Ds ds;
  const LooseTree one = ds.tree({{}}, {A}, A | B);
  const WitnessCheck trivial = validate_witness(one, {{ds(A)}, {0}});
  CHECK(trivial.basic);
  CHECK(trivial.refined);

  const LooseTree lt = ds.tree(kThree, {0, A, B}, A | B);
  const IndexOrder e = order_of(lt, kThree);
  const WitnessCheck ok = validate_witness(lt, {{ds(0), ds(A), ds(A | B)}, e});
  CHECK(ok.basic);
  CHECK(ok.refined);
  const WitnessCheck out_of_ambient =
      validate_witness(lt, {{ds(0), ds(A), ds(A | B | C)}, e});
  CHECK_FALSE(out_of_ambient.basic);
  CHECK(out_of_ambient.failure.rfind("(i)", 0) == 0);

  // Room for a non-prime last model.
  const LooseTree roomy = ds.tree(kThree, {0, A, B}, A | B | C);
  const WitnessCheck loose =
      validate_witness(roomy, {{ds(0), ds(A), ds(A | B | C)}, e});
  CHECK(loose.basic);
  CHECK_FALSE(loose.refined);
  CHECK_FALSE(loose.refined_failure.empty());

  CHECK_THROWS_AS(validate_witness(lt, {{ds(0), ds(A), ds(A | B)}, {1, 0, 2}}),
                  LooseTreeError);
}

TEST_CASE("finding witnesses") {
  const Ds ds;
  const LooseTree lt = ds.tree(kThree, {0, A, B}, A | B);
  const auto w = find_witness(lt, order_of(lt, kThree));
  REQUIRE(w.has_value());
  CHECK(w->models == std::vector<ModelIndex>{ds(0), ds(A), ds(A | B)});

  // Siblings M3 <= M4 under the same parent: never free.
  const LooseTree bad =
      ds.tree(kFive, {0, A, B, B | C, B | C | D}, A | B | C | D);
  for (const IndexOrder& e : all_enumeration_orders(bad.shape)) {
    CHECK_FALSE(find_witness(bad, e).has_value());
    CHECK_FALSE(brute_free(bad, e));
  }

  const Vs vs;
  const LooseTree lines = make_loose_tree(
      vs.frag, TreeShape::of(Tree::validate(kThree)),
      {vs.span({1}), vs.span({2}), vs.span({4})}, vs.span({1, 2, 4}));
  const auto wl = find_witness(lines, order_of(lines, kThree));
  REQUIRE(wl.has_value());
  CHECK(wl->models ==
        std::vector<ModelIndex>{vs.span({1}), vs.span({1, 2}),
                                vs.span({1, 2, 4})});
  CHECK(validate_witness(lines, *wl).refined);
}

TEST_CASE("greedy witnesses agree with exhaustive search") {
  const Ds ds;
  std::mt19937 rng(11);
  std::uniform_int_distribution<AtomSet> pick(0, 15);
  for (int round = 0; round < 300; ++round) {
    std::vector<AtomSet> sets;
    for (std::size_t k = 0; k < kFive.size(); ++k) sets.push_back(pick(rng));
    AtomSet amb = 0;
    for (AtomSet s : sets) amb |= s;
    if (rng() % 2) amb = 15;
    const LooseTree lt = ds.tree(kFive, sets, amb);
    for (const IndexOrder& e : all_enumeration_orders(lt.shape)) {
      CHECK(is_free(lt, e) == brute_free(lt, e));
    }
  }
}

TEST_CASE("freeness across enumerations") {
  const Ds ds;
  const LooseTree single = ds.tree({{}}, {A}, A);
  CHECK(check_free_all_enumerations(single).free_count == 1);

  const LooseTree lt = ds.tree(kFive, {0, A, B, B | C, B | D}, A | B | C | D);
  const FreeReport r = check_free_all_enumerations(lt);
  CHECK(r.orders.size() == 8);
  CHECK(r.free_count == 8);
  CHECK(r.agree);

  const LooseTree bad =
      ds.tree(kFive, {0, A, B, B | C, B | C | D}, A | B | C | D);
  const FreeReport rb = check_free_all_enumerations(bad);
  CHECK(rb.free_count == 0);
  CHECK(rb.agree);
}

TEST_CASE("almost free witnesses may use a larger ambient") {
  const Ds ds;
  const LooseTree lt = ds.tree(kThree, {0, A, B}, A | B);
  const auto w = find_almost_free_witness(lt, order_of(lt, kThree));
  REQUIRE(w.has_value());
  CHECK(w->ambient == ds(A | B));
  const LooseTree bad =
      ds.tree(kFive, {0, A, B, B | C, B | C | D}, A | B | C | D);
  CHECK_FALSE(
      find_almost_free_witness(bad, all_enumeration_orders(bad.shape)[0]));
}

TEST_CASE("explicit primes") {
  const Ds ds;
  const LooseTree lt = ds.tree(kThree, {0, A, B}, A | B | C);
  CHECK(explicit_prime(lt, order_of(lt, kThree)) == ds(A | B));

  const Vs vs;
  const LooseTree lines = make_loose_tree(
      vs.frag, TreeShape::of(Tree::validate(kThree)),
      {vs.span({}), vs.span({1}), vs.span({2})}, vs.span({1, 2, 4}));
  CHECK(explicit_prime(lines, order_of(lines, kThree)) == vs.span({1, 2}));

  const LooseTree five =
      ds.tree(kFive, {0, A, B, B | C, B | D}, A | B | C | D);
  const auto orders = all_enumeration_orders(five.shape);
  const ModelIndex p = explicit_prime(five, orders.front());
  for (const IndexOrder& e : orders) {
    CHECK(isomorphic_over_tree(five, p, explicit_prime(five, e)));
  }
  const LooseTree bad =
      ds.tree(kFive, {0, A, B, B | C, B | C | D}, A | B | C | D);
  try {
    explicit_prime(bad, orders.front());
    FAIL("expected NotFree");
  } catch (const LooseTreeError& e) {
    CHECK(e.code() == LooseTreeErrc::kNotFree);
  }
}

TEST_CASE("swap transform") {
  const Ds ds;
  const LooseTree lt = ds.tree(kFive, {0, A, B, B | C, B | D}, A | B | C | D);
  const IndexOrder e = order_of(lt, kFive);
  const WitnessSequence w = *find_witness(lt, e);
  // Positions 3 and 4 hold the siblings [1,0] and [1,1].
  const WitnessSequence s = swap_transform(lt, w, 3);
  CHECK(validate_witness(lt, s).basic);
  CHECK(s.models == std::vector<ModelIndex>{ds(0), ds(A), ds(A | B),
                                            ds(A | B | D), ds(A | B | C | D)});
  const WitnessSequence back = swap_transform(lt, s, 3);
  CHECK(back.order == e);
  CHECK(validate_witness(lt, back).basic);
  try {
    swap_transform(lt, w, 2);  // [1] and [1,0]
    FAIL("expected NodesComparable");
  } catch (const LooseTreeError& err) {
    CHECK(err.code() == LooseTreeErrc::kNodesComparable);
  }

  const Vs vs;
  const LooseTree lines = make_loose_tree(
      vs.frag, TreeShape::of(Tree::validate(kThree)),
      {vs.span({1}), vs.span({2}), vs.span({4})}, vs.span({1, 2, 4}));
  const auto wl = *find_witness(lines, order_of(lines, kThree));
  CHECK(validate_witness(lines, swap_transform(lines, wl, 1)).basic);
}

TEST_CASE("omission transform") {
  const Ds ds;
  const std::vector<TreeNode> chain{{}, {0}, {0, 0}};
  const LooseTree lt = ds.tree(chain, {0, A, A | B}, A | B | C);
  const auto w = *find_witness(lt, order_of(lt, chain));
  const OmissionResult r = omission_transform(lt, w, {0, 0});
  CHECK(r.tree.shape.size() == 2);
  CHECK(r.tree.at(TreeNode{0}) == ds(A | B));
  CHECK(validate_witness(r.tree, r.witness).basic);
  CHECK(is_free(r.tree));

  // M_r = M_s: only the entry is dropped.
  const LooseTree same = ds.tree(chain, {0, A, A}, A | B);
  const auto ws = *find_witness(same, order_of(same, chain));
  const OmissionResult rs = omission_transform(same, ws, {0, 0});
  CHECK(rs.witness.models == std::vector<ModelIndex>{ws.models[0], ws.models[2]});

  // Four nodes, r needs to be moved next to s first.
  const std::vector<TreeNode> four{{}, {0}, {1}, {0, 0}};
  const LooseTree lt4 = ds.tree(four, {0, A, B, A | C}, A | B | C | D);
  const auto w4 = *find_witness(lt4, order_of(lt4, four));
  const OmissionResult r4 = omission_transform(lt4, w4, {0, 0});
  CHECK(r4.swaps.size() == 1);
  CHECK(validate_witness(r4.tree, r4.witness).basic);

  const LooseTree no = ds.tree(chain, {0, A | B, A}, A | B);
  try {
    omission_transform(no, *find_witness(no, order_of(no, chain)), {0, 0});
    FAIL("expected PreconditionFailed");
  } catch (const LooseTreeError& e) {
    CHECK(e.code() == LooseTreeErrc::kPreconditionFailed);
  }
}

TEST_CASE("substitution") {
  const Ds ds;
  const LooseTree lt = ds.tree(kThree, {0, A, B}, A | B | D);
  const LooseTree same = substitute(lt, {0}, lt.at(TreeNode{0}));
  CHECK(same.assign == lt.assign);
  const LooseTree grown = substitute(lt, {0}, ds(A | D));
  CHECK(grown.at(TreeNode{0}) == ds(A | D));
  try {
    substitute(lt, {0}, ds(A | C));
    FAIL("expected NotInAmbient");
  } catch (const LooseTreeError& e) {
    CHECK(e.code() == LooseTreeErrc::kNotInAmbient);
  }
}

TEST_CASE("substitution can break the intersection condition") {
  // Powerset naming has members whose intersection is not a member.
  const auto frag = std::make_shared<const Fragment>(
      std::make_shared<PowersetNaming>(2, 2, PowersetNaming::NfMode::kNaive));
  const Fragment& f = *frag;
  bool found = false;
  for (ModelIndex amb = 0; amb < f.size() && !found; ++amb)
    for (ModelIndex r = 0; r < f.size() && !found; ++r)
      for (ModelIndex x = 0; x < f.size() && !found; ++x)
        for (ModelIndex n = 0; n < f.size() && !found; ++n) {
          if (!f.sub(r, amb) || !f.sub(x, amb) || !f.sub(n, amb)) continue;
          if (!f.sub(r, x)) continue;
          if (f.intersect(n, r) && f.sub(*f.intersect(n, r), n) &&
              f.sub(*f.intersect(n, r), r)) {
            continue;
          }
          const LooseTree lt = make_loose_tree(
              frag, TreeShape::of(Tree::validate({{}, {0}})), {r, x}, amb);
          found = true;
          try {
            substitute(lt, {0}, n);
            FAIL("expected IntersectionCondition");
          } catch (const LooseTreeError& e) {
            CHECK(e.code() == LooseTreeErrc::kIntersectionCondition);
            CHECK(std::string(e.what()).find("[]") != std::string::npos);
          }
        }
  CHECK(found);
}

TEST_CASE("substituting a prime over an edge keeps the tree free") {
  const Ds ds;
  const LooseTree lt = ds.tree(kThree, {A, A | B, A | C}, A | B | C);
  const SubstitutionReport r = substitute_prime_node_check(lt, {0});
  CHECK(r.vee_free);
  REQUIRE(r.prime.has_value());
  CHECK(*r.prime == ds(A | B));
  CHECK(r.pass);

  const Vs vs;
  const LooseTree lines = make_loose_tree(
      vs.frag, TreeShape::of(Tree::validate(kThree)),
      {vs.span({1}), vs.span({2}), vs.span({4})}, vs.span({1, 2, 4}));
  const SubstitutionReport rv = substitute_prime_node_check(lines, {0});
  REQUIRE(rv.prime.has_value());
  CHECK(*rv.prime == vs.span({1, 2}));
  CHECK(rv.pass);
}

TEST_CASE("quotients of free loose trees") {
  const Ds ds;
  const std::vector<TreeNode> four{{}, {0}, {1}, {0, 0}};
  const LooseTree lt = ds.tree(four, {0, A, B, A | C}, A | B | C | D);
  const QuotientReport root = quotient_check(lt, Ideal{{}});
  CHECK(root.pass);
  const QuotientReport whole = quotient_check(lt, Ideal(four));
  CHECK(whole.pass);
  const QuotientReport mid = quotient_check(lt, Ideal{{}, {0}});
  CHECK(mid.pass);
  for (const QuotientCase& c : mid.cases) {
    CHECK(c.quotient_free);
    CHECK(c.extends);
    REQUIRE(c.prime.has_value());
    CHECK(*c.prime == ds(A));
  }
  try {
    quotient_check(lt, Ideal{{}, {0, 0}});
    FAIL("expected NotAnIdeal");
  } catch (const LooseTreeError& e) {
    CHECK(e.code() == LooseTreeErrc::kNotAnIdeal);
  }
}

TEST_CASE("local freeness") {
  const Ds ds;
  CHECK(is_locally_free(ds.tree({{}}, {A}, A)));
  CHECK(is_locally_free(
      ds.tree(kFive, {0, A, B, B | C, B | D}, A | B | C | D)));
  CHECK_FALSE(is_locally_free(
      ds.tree(kFive, {0, A, B, B | C, B | C | D}, A | B | C | D)));
}

TEST_CASE("the conclusion on free trees") {
  const Ds ds;
  const ConclusionReport r =
      check_conclusion(ds.tree(kFive, {0, A, B, B | C, B | D}, A | B | C | D));
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.free);
  CHECK(r.lfp.extensions_checked > 0);

  const Vs vs;
  const LooseTree lines = make_loose_tree(
      vs.frag, TreeShape::of(Tree::validate(kThree)),
      {vs.span({1}), vs.span({2}), vs.span({4})}, vs.span({1, 2, 4}));
  CHECK(check_conclusion(lines).verdict == Verdict::kPass);

  const ConclusionReport bad = check_conclusion(
      ds.tree(kFive, {0, A, B, B | C, B | C | D}, A | B | C | D));
  CHECK_FALSE(bad.free);
  CHECK(bad.note == "not free; conclusion vacuous");
}
