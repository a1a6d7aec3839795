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

#include "adequate/checkers.hpp"
#include "adequate/fragment.hpp"
#include "adequate/instances.hpp"

using namespace adequate;

namespace {

// Subsets of {a,b,c} ordered by inclusion, except that {a} is not below
// {a,b,c}: a broken order for negative tests.
class BrokenOrder : public ClassInstance {
 public:
  BrokenOrder() = default;
  std::string kind() const override { return "broken_order"; }
  const Signature& signature() const override { return sig_; }
  std::vector<Model> fragment() const override {
    return {Model(0, {}), Model(1, {}), Model(3, {}), Model(7, {})};
  }
  bool fragment_complete() const override { return true; }
  bool is_member(const Model& m) const override {
    const AtomSet c = m.carrier();
    return c == 0 || c == 1 || c == 3 || c == 7;
  }
  bool is_sub(const Model& m, const Model& n) const override {
    if (m.carrier() == 1 && n.carrier() == 7) return false;
    return subset_of(m.carrier(), n.carrier());
  }
  bool nf(const Model&, const Model&, const Model&,
          const Model&) const override {
    return false;
  }
  std::optional<Model> prime_over_vee(const Model&, const Model&,
                                      const Model&,
                                      const Model&) const override {
    return std::nullopt;
  }

 private:
  Signature sig_;
};

class OnePoint : public ClassInstance {
 public:
  std::string kind() const override { return "one_point"; }
  const Signature& signature() const override { return sig_; }
  std::vector<Model> fragment() const override { return {Model(1, {})}; }
  bool fragment_complete() const override { return true; }
  bool is_member(const Model& m) const override { return m.carrier() == 1; }
  bool is_sub(const Model& m, const Model& n) const override {
    return m == n;
  }
  bool nf(const Model&, const Model&, const Model&,
          const Model&) const override {
    return true;
  }
  std::optional<Model> prime_over_vee(const Model&, const Model&,
                                      const Model& m2,
                                      const Model&) const override {
    return m2;
  }

 private:
  Signature sig_;
};

std::shared_ptr<const Fragment> ds(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return std::make_shared<const Fragment>(std::make_shared<DisjointSets>(names));
}

std::shared_ptr<const Fragment> vs(int dim) {
  return std::make_shared<const Fragment>(std::make_shared<VectorSpaceF2>(dim));
}

std::shared_ptr<const Fragment> pn(int variant, PowersetNaming::NfMode mode) {
  return std::make_shared<const Fragment>(
      std::make_shared<PowersetNaming>(2, variant, mode));
}

Verdict verdict(const AxiomReport& r, const std::string& axiom) {
  const AxiomEntry* e = r.find(axiom);
  REQUIRE(e != nullptr);
  return e->verdict;
}

void no_required_fail(const AxiomReport& r) {
  for (const AxiomEntry& e : r.entries) {
    INFO(e.axiom);
    if (e.required) CHECK(e.verdict != Verdict::kFail);
  }
}

}  // namespace

TEST_CASE("group A on disjoint sets over three atoms") {
  const auto f = ds(3);
  const AxiomReport r = check_axioms_A(*f, 2);
  for (const char* a : {"A0", "A1", "A2", "A3", "A4"}) {
    INFO(a);
    CHECK(verdict(r, a) == Verdict::kPass);
  }
}

TEST_CASE("a non-transitive order fails A2 with a replayable triple") {
  const Fragment f(std::make_shared<BrokenOrder>());
  const AxiomReport r = check_axioms_A(f, 2);
  const AxiomEntry* a2 = r.find("A2");
  REQUIRE(a2 != nullptr);
  CHECK(a2->verdict == Verdict::kFail);
  CHECK(a2->counterexample.size() == 3);
  CHECK(replay_entry(f, *a2) == Verdict::kFail);
  CHECK(r.has_fail());
}

TEST_CASE("a one-model fragment satisfies A0 by reflexivity") {
  const Fragment f(std::make_shared<OnePoint>());
  CHECK(verdict(check_axioms_A(f, 1), "A0") == Verdict::kPass);
}

TEST_CASE("group C on the well-behaved instances") {
  const AxiomReport d = check_axioms_C(*ds(3));
  CHECK(verdict(d, "C7") == Verdict::kPass);
  no_required_fail(d);
  const AxiomReport v = check_axioms_C(*vs(3));
  CHECK(verdict(v, "C6") == Verdict::kPass);
  no_required_fail(v);
}

TEST_CASE("C7 fails for variant 2 with naive nf, and agrees with an oracle") {
  const auto f = pn(2, PowersetNaming::NfMode::kNaive);
  // Oracle: an nf quadruple whose outer models overlap beyond the base.
  bool oracle = false;
  for (const Quad& q : f->amalgams()) {
    const AtomSet overlap = f->model(q[1]).carrier() & f->model(q[2]).carrier();
    if (overlap != f->model(q[0]).carrier()) oracle = true;
  }
  CHECK(oracle);
  const AxiomReport r = check_axioms_C(*f);
  const AxiomEntry* c7 = r.find("C7");
  REQUIRE(c7 != nullptr);
  CHECK(c7->verdict == Verdict::kFail);
  CHECK(c7->counterexample.size() == 4);
  CHECK(replay_entry(*f, *c7) == Verdict::kFail);
}

TEST_CASE("C7 holds for variant 1 with the default nf") {
  const auto f = pn(1, PowersetNaming::NfMode::kFree);
  CHECK(verdict(check_axioms_C(*f), "C7") == Verdict::kPass);
}

TEST_CASE("base monotonicity, D and the derived theorems") {
  for (const auto& f : {ds(4), vs(3)}) {
    CHECK(verdict(check_prop_base_monotonicity(*f), "base-monotonicity") ==
          Verdict::kPass);
    const AxiomReport d = check_axioms_D(*f);
    CHECK(verdict(d, "D1") == Verdict::kPass);
    CHECK(verdict(d, "D2") == Verdict::kPass);
    CHECK(verdict(check_theorem_transind(*f), "transitivity-of-independence") ==
          Verdict::kPass);
    CHECK(verdict(check_theorem_transprime(*f), "transitivity-of-primality") ==
          Verdict::kPass);
  }
}

TEST_CASE("reports round-trip through JSON") {
  const auto f = pn(2, PowersetNaming::NfMode::kNaive);
  AxiomReport r = run_groups(*f, {"C"});
  r.instance = nlohmann::json{{"kind", "powerset_naming"}, {"u_max", 2},
                              {"variant", 2}};
  const AxiomReport back = report_from_json(to_json(r));
  CHECK(to_json(back) == to_json(r));
  CHECK(back.has_fail());
  for (const AxiomEntry& e : back.entries) {
    if (e.verdict == Verdict::kFail) CHECK(replay_entry(*f, e) == Verdict::kFail);
  }
}
