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

#include "adequate/model.hpp"

#include <algorithm>

namespace adequate {

std::vector<Atom> atoms_of(AtomSet set) {
  std::vector<Atom> out;
  for (; set != 0; set &= set - 1) {
    out.push_back(static_cast<Atom>(std::countr_zero(set)));
  }
  return out;
}

Model::Model(AtomSet carrier, std::vector<Fact> facts)
    : carrier_(carrier), facts_(std::move(facts)) {
  std::sort(facts_.begin(), facts_.end());
  facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());
}

bool Model::has_fact(const Fact& fact) const {
  return std::binary_search(facts_.begin(), facts_.end(), fact);
}

namespace {

AtomSet fact_atoms(const Fact& fact, const Signature& signature) {
  AtomSet atoms = 0;
  const int arity = signature.at(fact.relation).arity;
  for (int k = 0; k < arity; ++k) atoms |= singleton(fact.args[k]);
  return atoms;
}

}  // namespace

Model restrict(const Model& model, AtomSet atoms, const Signature& signature) {
  atoms &= model.carrier();
  std::vector<Fact> kept;
  for (const Fact& fact : model.facts()) {
    if (subset_of(fact_atoms(fact, signature), atoms)) kept.push_back(fact);
  }
  return Model(atoms, std::move(kept));
}

bool is_induced_substructure(const Model& small, const Model& big,
                             const Signature& signature) {
  if (!subset_of(small.carrier(), big.carrier())) return false;
  return restrict(big, small.carrier(), signature).facts() == small.facts();
}

// ---------------------------------------------------------------------------
// AtomMap

AtomSet AtomMap::apply(AtomSet set) const {
  AtomSet out = 0;
  for (; set != 0; set &= set - 1) {
    const auto a = static_cast<Atom>(std::countr_zero(set));
    if (defined(a)) out |= singleton(at(a));
  }
  return out;
}

AtomMap AtomMap::restricted(AtomSet atoms) const {
  AtomMap out;
  for (AtomSet rest = atoms & domain_; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<Atom>(std::countr_zero(rest));
    out.set(a, at(a));
  }
  return out;
}

AtomMap AtomMap::then(const AtomMap& next) const {
  AtomMap out;
  for (AtomSet rest = domain_; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<Atom>(std::countr_zero(rest));
    if (next.defined(at(a))) out.set(a, next.at(at(a)));
  }
  return out;
}

bool AtomMap::compatible(const AtomMap& other) const {
  for (AtomSet rest = domain_ & other.domain_; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<Atom>(std::countr_zero(rest));
    if (at(a) != other.at(a)) return false;
  }
  const AtomMap both = merged(other);
  return cardinality(both.range()) == cardinality(both.domain());
}

AtomMap AtomMap::merged(const AtomMap& other) const {
  AtomMap out = *this;
  for (AtomSet rest = other.domain_ & ~domain_; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<Atom>(std::countr_zero(rest));
    out.set(a, other.at(a));
  }
  return out;
}

AtomMap AtomMap::identity(AtomSet atoms) {
  AtomMap out;
  for (AtomSet rest = atoms; rest != 0; rest &= rest - 1) {
    const auto a = static_cast<Atom>(std::countr_zero(rest));
    out.set(a, a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Embedding search

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Model& source, const Model& target,
                  const Signature& signature,
                  const std::function<bool(const AtomMap&)>& visit)
      : source_(source), target_(target), signature_(signature),
        visit_(visit) {
    for (const Fact& f : source.facts()) {
      for (Atom a : atoms_of(fact_atoms(f, signature))) {
        source_by_atom_[a].push_back(&f);
      }
    }
    for (const Fact& f : target.facts()) {
      for (Atom a : atoms_of(fact_atoms(f, signature))) {
        target_by_atom_[a].push_back(&f);
      }
    }
    inverse_.fill(-1);
  }

  // Returns false iff the visitor stopped the search.
  bool run(const AtomMap& fixed) {
    const AtomSet fixed_domain = fixed.domain() & source_.carrier();
    for (Atom a : atoms_of(fixed_domain)) {
      const Atom b = fixed.at(a);
      if (!(target_.carrier() & singleton(b))) return true;
      if (map_.range() & singleton(b)) return true;
      map_.set(a, b);
      inverse_[b] = static_cast<std::int8_t>(a);
    }
    for (Atom a : atoms_of(fixed_domain)) {
      if (!consistent(a)) return true;
    }
    free_ = atoms_of(source_.carrier() & ~fixed_domain);
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == free_.size()) return visit_(map_);
    const Atom a = free_[depth];
    for (Atom b : atoms_of(target_.carrier() & ~map_.range())) {
      AtomMap saved = map_;
      map_.set(a, b);
      inverse_[b] = static_cast<std::int8_t>(a);
      if (consistent(a) && !extend(depth + 1)) return false;
      inverse_[b] = -1;
      map_ = saved;
    }
    return true;
  }

  bool consistent(Atom a) const {
    for (const Fact* f : source_by_atom_[a]) {
      if (!subset_of(fact_atoms(*f, signature_), map_.domain())) continue;
      Fact image = *f;
      const int arity = signature_[f->relation].arity;
      for (int k = 0; k < arity; ++k) image.args[k] = map_.at(f->args[k]);
      if (!target_.has_fact(image)) return false;
    }
    const Atom b = map_.at(a);
    for (const Fact* g : target_by_atom_[b]) {
      if (!subset_of(fact_atoms(*g, signature_), map_.range())) continue;
      Fact preimage = *g;
      const int arity = signature_[g->relation].arity;
      for (int k = 0; k < arity; ++k) {
        preimage.args[k] = static_cast<Atom>(inverse_[g->args[k]]);
      }
      if (!source_.has_fact(preimage)) return false;
    }
    return true;
  }

  const Model& source_;
  const Model& target_;
  const Signature& signature_;
  const std::function<bool(const AtomMap&)>& visit_;
  std::array<std::vector<const Fact*>, kMaxAtoms> source_by_atom_;
  std::array<std::vector<const Fact*>, kMaxAtoms> target_by_atom_;
  std::array<std::int8_t, kMaxAtoms> inverse_;
  AtomMap map_;
  std::vector<Atom> free_;
};

}  // namespace

bool for_each_embedding(const Model& source, const Model& target,
                        const Signature& signature, const AtomMap& fixed,
                        const std::function<bool(const AtomMap&)>& visit) {
  if (source.size() > target.size()) return true;
  EmbeddingSearch search(source, target, signature, visit);
  return search.run(fixed);
}

}  // namespace adequate
