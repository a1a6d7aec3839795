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

// Concrete classes: plain sets, subspaces of a small F2 vector space, and
// the powerset-naming structures (U, V, E) with two choices of <=.

#ifndef ADEQUATE_INSTANCES_HPP_
#define ADEQUATE_INSTANCES_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "adequate/class_instance.hpp"
#include "json.hpp"

namespace adequate {

enum class InstanceErrc {
  kUniverseTooLarge,
  kDimTooLarge,
  kUnknownInstance,
  kConfigParse,
};

const char* to_string(InstanceErrc code);

class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}
  InstanceErrc code() const { return code_; }

 private:
  InstanceErrc code_;
};

// Subsets of a named universe (at most 6 atoms), ordered by inclusion.
class DisjointSets : public ClassInstance {
 public:
  static constexpr std::size_t kMaxUniverse = 6;

  explicit DisjointSets(std::vector<std::string> universe);

  std::string kind() const override { return "disjoint_sets"; }
  const Signature& signature() const override { return signature_; }
  std::vector<Model> fragment() const override;
  bool fragment_complete() const override { return true; }
  bool is_member(const Model& m) const override;
  bool is_sub(const Model& m, const Model& n) const override;
  bool nf(const Model& m0, const Model& m1, const Model& m2,
          const Model& m3) const override;
  std::optional<Model> prime_over_vee(const Model& m0, const Model& m1,
                                      const Model& m2,
                                      const Model& m3) const override;
  std::string atom_name(Atom a) const override;

  const std::vector<std::string>& universe() const { return universe_; }
  AtomSet universe_mask() const;
  Model set(AtomSet atoms) const { return Model(atoms, {}); }

 private:
  std::vector<std::string> universe_;
  Signature signature_;
};

// Subspaces of F2^dim. Atoms are the vectors themselves; the ternary
// relation add(x, y, z) holds when x + y = z inside the carrier.
class VectorSpaceF2 : public ClassInstance {
 public:
  static constexpr int kMaxDim = 4;

  explicit VectorSpaceF2(int dim);

  std::string kind() const override { return "vector_space_f2"; }
  const Signature& signature() const override { return signature_; }
  std::vector<Model> fragment() const override;
  bool fragment_complete() const override { return true; }
  bool is_member(const Model& m) const override;
  bool is_sub(const Model& m, const Model& n) const override;
  bool nf(const Model& m0, const Model& m1, const Model& m2,
          const Model& m3) const override;
  std::optional<Model> prime_over_vee(const Model& m0, const Model& m1,
                                      const Model& m2,
                                      const Model& m3) const override;
  std::string atom_name(Atom a) const override;

  int dim() const { return dim_; }
  // The subspace on a carrier closed under addition, with its facts.
  Model subspace(AtomSet carrier) const;
  Model span(const std::vector<unsigned>& vectors) const;
  static int dimension(AtomSet carrier);
  // Carrier of the sum of two subspaces.
  static AtomSet span_carrier(AtomSet a, AtomSet b);

 private:
  int dim_;
  Signature signature_;
};

// Structures (U, V, E) where every subset of U has exactly one name in V.
// Atoms 0..u_max-1 are U-atoms; atom u_max + X is the name atom v_X, which
// in a model M names X restricted to U(M).
class PowersetNaming : public ClassInstance {
 public:
  static constexpr int kMaxU = 3;
  enum class NfMode { kNaive, kFree };

  PowersetNaming(int u_max, int variant, NfMode mode);

  std::string kind() const override { return "powerset_naming"; }
  const Signature& signature() const override { return signature_; }
  std::vector<Model> fragment() const override;
  // Name atoms carry fixed meanings, so extensions that need fresh U-atoms
  // fall outside the universe: the fragment is never complete.
  bool fragment_complete() const override { return false; }
  bool is_member(const Model& m) const override;
  bool is_sub(const Model& m, const Model& n) const override;
  bool nf(const Model& m0, const Model& m1, const Model& m2,
          const Model& m3) const override;
  std::optional<Model> prime_over_vee(const Model& m0, const Model& m1,
                                      const Model& m2,
                                      const Model& m3) const override;
  std::string atom_name(Atom a) const override;

  int u_max() const { return u_max_; }
  int variant() const { return variant_; }
  NfMode nf_mode() const { return mode_; }

  AtomSet u_atoms(const Model& m) const { return m.carrier() & u_mask_; }
  AtomSet v_atoms(const Model& m) const { return m.carrier() & ~u_mask_; }
  Atom name_atom(unsigned subset) const {
    return static_cast<Atom>(u_max_ + subset);
  }
  // The subset of U(m), as a U-atom mask, that name atom v denotes in m.
  AtomSet named_in(Atom v, const Model& m) const;
  // The structure carried by `carrier` with its forced facts.
  Model structure(AtomSet carrier) const;

 private:
  int u_max_;
  int variant_;
  NfMode mode_;
  AtomSet u_mask_;
  Signature signature_;
};

// Builds an instance from a config object such as
// {"kind":"disjoint_sets","universe":["a","b","c"]},
// {"kind":"vector_space_f2","dim":3} or
// {"kind":"powerset_naming","u_max":2,"variant":1,"nf":"free"}.
std::shared_ptr<const ClassInstance> make_instance(const nlohmann::json& config);

}  // namespace adequate

#endif  // ADEQUATE_INSTANCES_HPP_
