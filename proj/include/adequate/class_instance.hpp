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

#ifndef ADEQUATE_CLASS_INSTANCE_HPP_
#define ADEQUATE_CLASS_INSTANCE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adequate/model.hpp"

namespace adequate {

// A finitely presented candidate class: a fragment of members together with
// the submodel relation, the free-amalgamation relation and the prime model
// constructor over vees. All operations are deterministic and pure.
class ClassInstance {
 public:
  virtual ~ClassInstance() = default;

  virtual std::string kind() const = 0;
  virtual const Signature& signature() const = 0;

  // The finite fragment the checkers quantify over, in a fixed order.
  virtual std::vector<Model> fragment() const = 0;

  // True when the fragment holds every member whose carrier lies in the
  // instance's atom universe. Only then may an exhausted existential search
  // be reported as a failure.
  virtual bool fragment_complete() const { return false; }

  virtual bool is_member(const Model& m) const = 0;
  virtual bool is_substructure(const Model& m, const Model& n) const;
  virtual bool is_sub(const Model& m, const Model& n) const = 0;
  virtual bool nf(const Model& m0, const Model& m1, const Model& m2,
                  const Model& m3) const = 0;

  // Literal intersection: the induced substructure on the common atoms, when
  // that is a member.
  virtual std::optional<Model> intersect(const Model& m,
                                         const Model& n) const;

  // A prime model over the vee (m0, m1, m2) inside m3, if the instance can
  // build one.
  virtual std::optional<Model> prime_over_vee(const Model& m0, const Model& m1,
                                              const Model& m2,
                                              const Model& m3) const = 0;

  // Atom maps m -> n that are isomorphisms onto a K-submodel of n.
  virtual std::vector<AtomMap> embeddings(const Model& m,
                                          const Model& n) const;

  virtual std::string atom_name(Atom a) const;
  std::optional<Atom> atom_by_name(std::string_view name) const;
};

}  // namespace adequate

#endif  // ADEQUATE_CLASS_INSTANCE_HPP_
