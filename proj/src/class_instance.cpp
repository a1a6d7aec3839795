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

#include "adequate/class_instance.hpp"

namespace adequate {

bool ClassInstance::is_substructure(const Model& m, const Model& n) const {
  return is_induced_substructure(m, n, signature());
}

std::optional<Model> ClassInstance::intersect(const Model& m,
                                              const Model& n) const {
  const AtomSet common = m.carrier() & n.carrier();
  Model meet = restrict(m, common, signature());
  // Both sides must induce the same structure on the common atoms.
  if (!(restrict(n, common, signature()) == meet)) return std::nullopt;
  if (!is_member(meet)) return std::nullopt;
  return meet;
}

std::vector<AtomMap> ClassInstance::embeddings(const Model& m,
                                               const Model& n) const {
  std::vector<AtomMap> out;
  for_each_embedding(m, n, signature(), AtomMap(), [&](const AtomMap& f) {
    Model image = restrict(n, f.range(), signature());
    if (is_member(image) && is_sub(image, n)) out.push_back(f);
    return true;
  });
  return out;
}

std::string ClassInstance::atom_name(Atom a) const {
  return "a" + std::to_string(a);
}

std::optional<Atom> ClassInstance::atom_by_name(std::string_view name) const {
  for (std::size_t a = 0; a < kMaxAtoms; ++a) {
    if (atom_name(static_cast<Atom>(a)) == name) return static_cast<Atom>(a);
  }
  return std::nullopt;
}

}  // namespace adequate
