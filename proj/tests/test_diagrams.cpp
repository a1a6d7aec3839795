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

#include "adequate/diagram.hpp"
#include "adequate/fragment.hpp"
#include "adequate/instances.hpp"

using namespace adequate;

namespace {

constexpr AtomSet A = 1, B = 2, C = 4, D = 8;

// Atoms a, b, c and a unary predicate P. Members: {a}, {a,b}, and {a,b,c}
// with or without P(c). Two extensions of the chain {a} <= {a,b} that
// disagree about P(c) have nowhere to meet inside three atoms.
class ColouredPoints : public ClassInstance {
 public:
  ColouredPoints() : sig_{{"P", 1}} {}
  std::string kind() const override { return "coloured_points"; }
  const Signature& signature() const override { return sig_; }
  std::vector<Model> fragment() const override {
    return {Model(A, {}), Model(A | B, {}), painted(), Model(A | B | C, {})};
  }
  bool fragment_complete() const override { return true; }
  bool is_member(const Model& m) const override {
    for (const Model& x : fragment()) {
      if (x.size() == m.size() && x.facts().size() == m.facts().size()) {
        return true;
      }
    }
    return false;
  }
  bool is_sub(const Model& m, const Model& n) const override {
    return is_induced_substructure(m, n, sig_);
  }
  bool nf(const Model& m0, const Model& m1, const Model& m2,
          const Model& m3) const override {
    return is_sub(m0, m1) && is_sub(m0, m2) && is_sub(m1, m3) &&
           is_sub(m2, m3) &&
           (m1.carrier() & m2.carrier()) == m0.carrier();
  }
  std::optional<Model> prime_over_vee(const Model&, const Model&,
                                      const Model&,
                                      const Model&) const override {
    return std::nullopt;
  }
  static Model painted() { return Model(A | B | C, {Fact{0, {2, 0, 0}}}); }

 private:
  Signature sig_;
};

std::shared_ptr<const Fragment> abcd() {
  return std::make_shared<const Fragment>(std::make_shared<DisjointSets>(
      std::vector<std::string>{"a", "b", "c", "d"}));
}

ModelIndex at(const Fragment& f, AtomSet carrier) {
  return *f.find(Model(carrier, {}));
}

}  // namespace

TEST_CASE("vees and chains are validated") {
  const auto f = abcd();
  CHECK_NOTHROW(make_vee(*f, at(*f, A), at(*f, A | B), at(*f, A | C)));
  try {
    make_vee(*f, at(*f, B), at(*f, A), at(*f, A | C));
    FAIL("expected NotAVee");
  } catch (const KernelError& e) {
    CHECK(e.code() == KernelErrc::kNotAVee);
  }
  CHECK_THROWS_AS(make_chain(*f, {}), KernelError);
  CHECK_THROWS_AS(make_chain(*f, {at(*f, A | B), at(*f, A)}), KernelError);
}

TEST_CASE("stable embeddings of a vee: brute count") {
  const auto f = abcd();
  const Diagram v = make_vee(*f, at(*f, 0), at(*f, A), at(*f, B));
  std::size_t count = 0;
  for_each_stable_embedding(*f, v, at(*f, A | B | C),
                            [&](const DiagramEmbedding& e) {
                              CHECK(is_stable(*f, v, at(*f, A | B | C), e));
                              ++count;
                              return true;
                            });
  CHECK(count == 3 * 2);  // a, b go to distinct atoms
  DiagramEmbedding bad = identity_embedding(*f, v);
  AtomMap clash;
  clash.set(1, 0);
  bad.maps[2] = clash;  // b -> a, so the legs overlap
  CHECK_FALSE(is_stable(*f, v, at(*f, A | B | C), bad));
}

TEST_CASE("compatibility over diagrams") {
  const auto f = abcd();
  const Diagram v = make_vee(*f, at(*f, A), at(*f, A | B), at(*f, A | C));
  const DiagramEmbedding id = identity_embedding(*f, v);
  const ModelIndex abc = at(*f, A | B | C);
  const auto w = compatible_over(*f, v, abc, id, abc, id);
  REQUIRE(w.has_value());
  // Any two members over the base are compatible.
  const Diagram base = make_chain(*f, {at(*f, A)});
  const DiagramEmbedding bid = identity_embedding(*f, base);
  for (ModelIndex m1 = 0; m1 < f->size(); ++m1) {
    for (ModelIndex m2 = 0; m2 < f->size(); ++m2) {
      if (!f->sub(at(*f, A), m1) || !f->sub(at(*f, A), m2)) continue;
      if (f->model(m1).size() + f->model(m2).size() > 5) continue;
      CHECK(compatible_over(*f, base, m1, bid, m2, bid).has_value());
    }
  }
}

TEST_CASE("extensions of a chain can be incompatible") {
  const auto f = std::make_shared<const Fragment>(
      std::make_shared<ColouredPoints>());
  const ModelIndex m0 = *f->find(Model(A, {}));
  const ModelIndex m1 = *f->find(Model(A | B, {}));
  const ModelIndex n1 = *f->find(ColouredPoints::painted());
  const ModelIndex n2 = *f->find(Model(A | B | C, {}));
  const Diagram chain = make_chain(*f, {m0, m1});
  const DiagramEmbedding id = identity_embedding(*f, chain);
  CHECK_FALSE(compatible_over(*f, chain, n1, id, n2, id).has_value());
  CHECK(compatible_over(*f, chain, n1, id, n1, id).has_value());
}

TEST_CASE("compatibility primality") {
  const auto f = abcd();
  const Diagram v = make_vee(*f, at(*f, A), at(*f, A | B), at(*f, A | C));
  const DiagramEmbedding id = identity_embedding(*f, v);
  CHECK(is_compatibility_prime(*f, v, at(*f, A | B | C), id).verdict ==
        Verdict::kPass);
  const PrimalityResult big =
      is_compatibility_prime(*f, v, at(*f, A | B | C | D), id);
  CHECK(big.verdict == Verdict::kFail);
  REQUIRE(big.refuting.has_value());
  CHECK(f->model(*big.refuting).size() == 3);
  CHECK(is_absolutely_prime(*f, v, at(*f, A | B | C), id).verdict ==
        Verdict::kPass);
}

TEST_CASE("cpr of finite chains") {
  const auto f = abcd();
  CHECK(cpr_finite(*f, {at(*f, B)}) == at(*f, B));
  const std::vector<ModelIndex> chain{at(*f, 0), at(*f, A), at(*f, A | C)};
  CHECK(cpr_finite(*f, chain) == at(*f, A | C));
  // Every chain of length <= 3: its cpr is compatibility prime.
  for (ModelIndex x = 0; x < f->size(); ++x) {
    for (ModelIndex y = 0; y < f->size(); ++y) {
      if (!f->sub(x, y)) continue;
      const Diagram d = make_chain(*f, {x, y});
      const ModelIndex top = cpr_finite(*f, {x, y});
      CHECK(is_compatibility_prime(*f, d, top, identity_embedding(*f, d))
                .verdict == Verdict::kPass);
    }
  }
}
