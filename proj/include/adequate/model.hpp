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

// Finite relational structures over a small atom universe, and a
// backtracking search for injective maps that are isomorphisms onto their
// image.

#ifndef ADEQUATE_MODEL_HPP_
#define ADEQUATE_MODEL_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace adequate {

using Atom = std::uint8_t;
inline constexpr std::size_t kMaxAtoms = 64;

// A set of atoms as a bit mask.
using AtomSet = std::uint64_t;

inline bool subset_of(AtomSet a, AtomSet b) { return (a & ~b) == 0; }
inline int cardinality(AtomSet a) { return std::popcount(a); }
inline AtomSet singleton(Atom a) { return AtomSet{1} << a; }

std::vector<Atom> atoms_of(AtomSet set);

struct Fact {
  std::uint8_t relation = 0;
  std::array<Atom, 3> args{};

  friend auto operator<=>(const Fact&, const Fact&) = default;
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct RelationSymbol {
  std::string name;
  int arity = 0;
};

using Signature = std::vector<RelationSymbol>;

// A finite structure: a carrier and the facts that hold among its atoms.
// Equality is structural; the id is a label only.
class Model {
 public:
  Model() = default;
  Model(AtomSet carrier, std::vector<Fact> facts);

  AtomSet carrier() const { return carrier_; }
  const std::vector<Fact>& facts() const { return facts_; }
  int size() const { return cardinality(carrier_); }
  bool has_fact(const Fact& fact) const;

  friend bool operator==(const Model& a, const Model& b) {
    return a.carrier_ == b.carrier_ && a.facts_ == b.facts_;
  }
  friend auto operator<=>(const Model& a, const Model& b) {
    if (auto c = a.carrier_ <=> b.carrier_; c != 0) return c;
    return a.facts_ <=> b.facts_;
  }

 private:
  AtomSet carrier_ = 0;
  std::vector<Fact> facts_;  // sorted, unique
};

// Induced substructure of `model` on `atoms` (which must lie in its carrier).
Model restrict(const Model& model, AtomSet atoms, const Signature& signature);

// Carrier containment plus agreement of facts on the smaller carrier.
bool is_induced_substructure(const Model& small, const Model& big,
                             const Signature& signature);

// Partial injective map between atom universes. Unmapped entries are -1.
class AtomMap {
 public:
  AtomMap() { image_.fill(-1); }

  bool defined(Atom a) const { return image_[a] >= 0; }
  Atom at(Atom a) const { return static_cast<Atom>(image_[a]); }
  void set(Atom a, Atom b) {
    image_[a] = static_cast<std::int8_t>(b);
    domain_ |= singleton(a);
    range_ |= singleton(b);
  }
  AtomSet domain() const { return domain_; }
  AtomSet range() const { return range_; }
  AtomSet apply(AtomSet set) const;

  // Restriction to `atoms` (intersected with the domain).
  AtomMap restricted(AtomSet atoms) const;
  // This map followed by `next`; defined where both are.
  AtomMap then(const AtomMap& next) const;
  // True if the maps agree wherever both are defined and together stay
  // injective.
  bool compatible(const AtomMap& other) const;
  // Union of two compatible maps.
  AtomMap merged(const AtomMap& other) const;

  static AtomMap identity(AtomSet atoms);

  friend bool operator==(const AtomMap&, const AtomMap&) = default;

 private:
  std::array<std::int8_t, kMaxAtoms> image_;
  AtomSet domain_ = 0;
  AtomSet range_ = 0;
};

// Visits every injective map from source's carrier into target's carrier
// that extends `fixed` and is an isomorphism onto the induced substructure
// on its image. Stops early when `visit` returns false. Returns false iff
// stopped early. `fixed` must map into target's carrier; entries of `fixed`
// outside source's carrier are ignored.
bool for_each_embedding(const Model& source, const Model& target,
                        const Signature& signature, const AtomMap& fixed,
                        const std::function<bool(const AtomMap&)>& visit);

}  // namespace adequate

#endif  // ADEQUATE_MODEL_HPP_
