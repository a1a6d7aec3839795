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

#include <memory>

#include "doctest.h"

#include "adequate/fragment.hpp"
#include "adequate/instances.hpp"

using namespace adequate;

namespace {

std::shared_ptr<DisjointSets> abcd() {
  return std::make_shared<DisjointSets>(
      std::vector<std::string>{"a", "b", "c", "d"});
}

constexpr AtomSet A = 1, B = 2, C = 4, D = 8;

}  // namespace

TEST_CASE("disjoint sets: nf is disjointness over the base") {
  const auto ds = abcd();
  auto s = [&](AtomSet m) { return ds->set(m); };
  CHECK(ds->nf(s(A), s(A | B), s(A | C), s(A | B | C)));
  CHECK_FALSE(ds->nf(s(A), s(A | B), s(A | B), s(A | B)));
  CHECK(ds->prime_over_vee(s(0), s(A), s(B), s(A | B | C)) == s(A | B));
  CHECK(ds->fragment().size() == 16);
  CHECK(ds->atom_name(2) == "c");
}

TEST_CASE("disjoint sets: nf matches its set-theoretic definition") {
  const auto ds = abcd();
  for (AtomSet m0 = 0; m0 < 16; ++m0)
    for (AtomSet m1 = 0; m1 < 16; ++m1)
      for (AtomSet m2 = 0; m2 < 16; ++m2)
        for (AtomSet m3 = 0; m3 < 16; ++m3) {
          const bool expect = subset_of(m0, m1) && subset_of(m0, m2) &&
                              subset_of(m1 | m2, m3) && (m1 & m2) == m0;
          CHECK(ds->nf(ds->set(m0), ds->set(m1), ds->set(m2), ds->set(m3)) ==
                expect);
        }
}

TEST_CASE("vector spaces over F2") {
  VectorSpaceF2 plane(2);
  const Model zero = plane.span({});
  const Model e1 = plane.span({0b01});
  const Model e2 = plane.span({0b10});
  const Model diag = plane.span({0b11});
  const Model all = plane.span({0b01, 0b10});
  CHECK(plane.nf(zero, e1, e2, all));
  CHECK_FALSE(plane.nf(zero, e1, e1, all));
  CHECK(plane.nf(zero, e1, diag, all));
  CHECK(plane.prime_over_vee(zero, e1, e2, all) == all);

  VectorSpaceF2 space(3);
  CHECK(space.fragment().size() == 16);  // subspaces of F2^3
  for (const Model& m : space.fragment()) {
    const int d = VectorSpaceF2::dimension(m.carrier());
    CHECK(m.size() == (1 << d));
    CHECK(space.is_member(m));
  }
  CHECK(space.atom_name(5) == "101");
}

TEST_CASE("vector spaces: nf is the dimension formula with trivial overlap") {
  VectorSpaceF2 space(3);
  const auto f = space.fragment();
  for (const Model& m0 : f)
    for (const Model& m1 : f)
      for (const Model& m2 : f) {
        const Model top = space.subspace(
            VectorSpaceF2::span_carrier(m1.carrier(), m2.carrier()));
        const bool expect =
            subset_of(m0.carrier(), m1.carrier()) &&
            subset_of(m0.carrier(), m2.carrier()) &&
            (m1.carrier() & m2.carrier()) == m0.carrier();
        CHECK(space.nf(m0, m1, m2, top) == expect);
      }
}

TEST_CASE("powerset naming: naive variant 1 is free over any base") {
  PowersetNaming pn(2, 1, PowersetNaming::NfMode::kNaive);
  const auto f = pn.fragment();
  for (const Model& m0 : f)
    for (const Model& m1 : f)
      for (const Model& m2 : f)
        for (const Model& m3 : f) {
          if (pn.is_sub(m0, m1) && pn.is_sub(m1, m3) && pn.is_sub(m0, m2) &&
              pn.is_sub(m2, m3)) {
            CHECK(pn.nf(m0, m1, m2, m3));
          }
        }
}

TEST_CASE("powerset naming: every subset of U has one name") {
  for (int variant : {1, 2}) {
    PowersetNaming pn(2, variant, PowersetNaming::NfMode::kNaive);
    for (const Model& m : pn.fragment()) {
      CHECK(pn.is_member(m));
      const int u = cardinality(pn.u_atoms(m));
      CHECK(cardinality(pn.v_atoms(m)) == (1 << u));
      AtomSet named = 0;
      int distinct = 0;
      for (Atom v : atoms_of(pn.v_atoms(m))) {
        const AtomSet x = pn.named_in(v, m);
        if (!(named & (AtomSet{1} << x))) ++distinct;
        named |= AtomSet{1} << x;
      }
      CHECK(distinct == (1 << u));
    }
  }
}

TEST_CASE("powerset naming variant 1: embeddings follow |U|") {
  auto pn = std::make_shared<PowersetNaming>(2, 1,
                                             PowersetNaming::NfMode::kFree);
  const Fragment frag(pn);
  for (ModelIndex m = 0; m < frag.size(); ++m) {
    for (ModelIndex n = 0; n < frag.size(); ++n) {
      const int um = cardinality(pn->u_atoms(frag.model(m)));
      const int un = cardinality(pn->u_atoms(frag.model(n)));
      CHECK(!frag.embeddings(m, n).empty() == (um <= un));
    }
  }
}

TEST_CASE("instances from config") {
  using nlohmann::json;
  CHECK(make_instance(json{{"kind", "disjoint_sets"},
                           {"universe", {"a", "b", "c"}}})
            ->fragment()
            .size() == 8);
  CHECK(make_instance(json{{"kind", "vector_space_f2"}, {"dim", 2}})
            ->fragment()
            .size() == 5);
  CHECK(make_instance(json{{"kind", "powerset_naming"},
                           {"u_max", 2},
                           {"variant", 2}})
            ->kind() == "powerset_naming");
  auto code = [](const json& j) {
    try {
      make_instance(j);
    } catch (const InstanceError& e) {
      return e.code();
    }
    FAIL("no error");
    return InstanceErrc::kConfigParse;
  };
  CHECK(code(json{{"kind", "groups"}}) == InstanceErrc::kUnknownInstance);
  CHECK(code(json{{"kind", "disjoint_sets"},
                  {"universe", {"a", "b", "c", "d", "e", "f", "g"}}}) ==
        InstanceErrc::kUniverseTooLarge);
  CHECK(code(json{{"kind", "vector_space_f2"}, {"dim", 5}}) ==
        InstanceErrc::kDimTooLarge);
  CHECK(code(json{{"kind", "disjoint_sets"}}) == InstanceErrc::kConfigParse);
}
