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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "adequate/model.hpp"

using namespace adequate;

namespace {

const Signature kGraph{{"E", 2}};

Model graph(AtomSet carrier, std::vector<std::pair<Atom, Atom>> edges) {
  std::vector<Fact> facts;
  for (auto [a, b] : edges) facts.push_back(Fact{0, {a, b, 0}});
  return Model(carrier, facts);
}

// Tries every injective assignment and compares facts in both directions.
std::set<std::vector<int>> brute_embeddings(const Model& s, const Model& t) {
  const auto src = atoms_of(s.carrier());
  const auto dst = atoms_of(t.carrier());
  std::set<std::vector<int>> out;
  if (src.size() > dst.size()) return out;
  std::vector<int> pick(dst.size(), 0);
  std::fill(pick.begin(), pick.begin() + src.size(), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<Atom> chosen;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (pick[i]) chosen.push_back(dst[i]);
    }
    do {
      std::vector<int> image(64, -1);
      for (std::size_t i = 0; i < src.size(); ++i) image[src[i]] = chosen[i];
      bool ok = true;
      for (Atom a : src) {
        for (Atom b : src) {
          const bool in_s = s.has_fact(Fact{0, {a, b, 0}});
          const bool in_t = t.has_fact(
              Fact{0, {Atom(image[a]), Atom(image[b]), 0}});
          if (in_s != in_t) ok = false;
        }
      }
      if (ok) out.insert(image);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("atom sets") {
  CHECK(subset_of(0b0101, 0b1101));
  CHECK_FALSE(subset_of(0b0011, 0b0110));
  CHECK(cardinality(0b1011) == 3);
  CHECK(atoms_of(0b1010) == std::vector<Atom>{1, 3});
}

TEST_CASE("models compare structurally") {
  const Model a = graph(0b11, {{0, 1}, {0, 1}});
  const Model b = graph(0b11, {{0, 1}});
  CHECK(a == b);
  CHECK(a.facts().size() == 1);
  CHECK_FALSE(a == graph(0b11, {}));
}

TEST_CASE("restriction and induced substructures") {
  const Model m = graph(0b111, {{0, 1}, {1, 2}});
  const Model r = restrict(m, 0b011, kGraph);
  CHECK(r == graph(0b011, {{0, 1}}));
  CHECK(is_induced_substructure(r, m, kGraph));
  CHECK_FALSE(is_induced_substructure(graph(0b011, {}), m, kGraph));
  CHECK_FALSE(is_induced_substructure(graph(0b1000, {}), m, kGraph));
}

TEST_CASE("atom maps") {
  AtomMap f;
  f.set(0, 2);
  f.set(1, 3);
  CHECK(f.apply(0b11) == 0b1100);
  CHECK(f.restricted(0b1).domain() == 0b1);
  AtomMap g;
  g.set(2, 5);
  g.set(3, 4);
  const AtomMap h = f.then(g);
  CHECK(h.at(0) == 5);
  CHECK(h.at(1) == 4);
  AtomMap clash;
  clash.set(4, 2);
  CHECK_FALSE(f.compatible(clash));  // union not injective
  AtomMap agree;
  agree.set(0, 2);
  agree.set(5, 7);
  CHECK(f.compatible(agree));
  CHECK(f.merged(agree).domain() == 0b100011);
  CHECK(AtomMap::identity(0b101).at(2) == 2);
}

TEST_CASE("embedding search agrees with brute force on random graphs") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    auto random_graph = [&](int n) {
      std::vector<std::pair<Atom, Atom>> e;
      for (Atom a = 0; a < n; ++a) {
        for (Atom b = 0; b < n; ++b) {
          if (rng() % 3 == 0) e.push_back({a, b});
        }
      }
      return graph((AtomSet{1} << n) - 1, e);
    };
    const Model s = random_graph(1 + rng() % 3);
    const Model t = random_graph(1 + rng() % 4);
    std::set<std::vector<int>> found;
    for_each_embedding(s, t, kGraph, AtomMap{}, [&](const AtomMap& m) {
      std::vector<int> image(64, -1);
      for (Atom a : atoms_of(s.carrier())) image[a] = m.at(a);
      found.insert(image);
      return true;
    });
    CHECK(found == brute_embeddings(s, t));
  }
}

TEST_CASE("embedding search honours fixed entries and early stop") {
  const Model s = graph(0b11, {{0, 1}});
  const Model t = graph(0b111, {{0, 1}, {1, 2}});
  AtomMap fixed;
  fixed.set(0, 1);
  int seen = 0;
  for_each_embedding(s, t, kGraph, fixed, [&](const AtomMap& m) {
    CHECK(m.at(1) == 2);
    ++seen;
    return true;
  });
  CHECK(seen == 1);
  CHECK_FALSE(for_each_embedding(s, t, kGraph, AtomMap{},
                                 [](const AtomMap&) { return false; }));
}
