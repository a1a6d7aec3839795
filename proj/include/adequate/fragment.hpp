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

#ifndef ADEQUATE_FRAGMENT_HPP_
#define ADEQUATE_FRAGMENT_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adequate/class_instance.hpp"
#include "adequate/model.hpp"

namespace adequate {

using ModelIndex = std::size_t;

enum class KernelErrc {
  kUnknownModel,
  kInvalidEmbedding,
  kEmptyChain,
  kNotAChain,
  kNotAVee,
  kFragmentTooLarge,
  kNotASemilattice,
};

const char* to_string(KernelErrc code);

class KernelError : public std::runtime_error {
 public:
  KernelError(KernelErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}
  KernelErrc code() const { return code_; }

 private:
  KernelErrc code_;
};

// A full free amalgam (m0, m1, m2, m3) of fragment indices.
using Quad = std::array<ModelIndex, 4>;

// The fragment of a ClassInstance, indexed. Models are addressed by their
// position; ids are "m<position>". Binary relations are tabulated up front;
// nf, embeddings and primality are memoized on first use, so a Fragment must
// not be shared across threads.
class Fragment {
 public:
  static constexpr std::size_t kMaxModels = 256;

  explicit Fragment(std::shared_ptr<const ClassInstance> instance);

  const ClassInstance& instance() const { return *instance_; }
  std::shared_ptr<const ClassInstance> instance_ptr() const {
    return instance_;
  }
  const Signature& signature() const { return instance_->signature(); }
  bool complete() const { return complete_; }

  std::size_t size() const { return models_.size(); }
  const Model& model(ModelIndex i) const { return models_.at(i); }
  std::string id(ModelIndex i) const;
  std::optional<ModelIndex> find(const Model& m) const;
  std::optional<ModelIndex> find_id(std::string_view id) const;
  ModelIndex require_id(std::string_view id) const;

  bool sub(ModelIndex m, ModelIndex n) const { return sub_[m * size() + n]; }
  bool substructure(ModelIndex m, ModelIndex n) const {
    return substructure_[m * size() + n];
  }
  std::optional<ModelIndex> intersect(ModelIndex m, ModelIndex n) const;
  bool nf(ModelIndex m0, ModelIndex m1, ModelIndex m2, ModelIndex m3) const;
  bool nf(const Quad& q) const { return nf(q[0], q[1], q[2], q[3]); }

  // Every quadruple of the fragment on which nf holds, lexicographic.
  const std::vector<Quad>& amalgams() const;

  // K-embeddings between fragment members (cached).
  const std::vector<AtomMap>& embeddings(ModelIndex m, ModelIndex n) const;

  // The fragment member on the image of `map` inside `target`, if the image
  // is a K-submodel of `target`.
  std::optional<ModelIndex> image_of(const AtomMap& map,
                                     ModelIndex target) const;

  // Visits K-embeddings of `source` into `target` extending `fixed`.
  // Returns false iff the visitor stopped the search.
  bool for_each_k_embedding(const Model& source, ModelIndex target,
                            const AtomMap& fixed,
                            const std::function<bool(const AtomMap&)>& visit)
      const;
  std::optional<AtomMap> find_k_embedding(const Model& source,
                                          ModelIndex target,
                                          const AtomMap& fixed) const;
  // An isomorphism a -> b that extends `fixed`.
  std::optional<AtomMap> find_isomorphism(ModelIndex a, ModelIndex b,
                                          const AtomMap& fixed) const;

  // Bounded absolute primality of p over the vee (base, left, right): the
  // vee sits freely inside p, and for every member N of the fragment and
  // every stable embedding of the vee into N there is a K-embedding of p
  // into N extending it. Returns the refuting N, or p itself if the vee is
  // not free inside p; nullopt means p is prime.
  std::optional<ModelIndex> prime_refutation(ModelIndex base, ModelIndex left,
                                             ModelIndex right,
                                             ModelIndex p) const;
  bool is_prime_over_vee(ModelIndex base, ModelIndex left, ModelIndex right,
                         ModelIndex p) const;

  // A prime model over the vee inside `ambient`: the instance constructor's
  // answer when it checks out, otherwise the first fragment member (by
  // size, then position) that does.
  std::optional<ModelIndex> prime_in(ModelIndex base, ModelIndex left,
                                     ModelIndex right,
                                     ModelIndex ambient) const;

 private:
  std::shared_ptr<const ClassInstance> instance_;
  std::vector<Model> models_;
  std::map<Model, ModelIndex> index_;
  bool complete_ = false;
  std::vector<bool> sub_;
  std::vector<bool> substructure_;
  std::vector<std::int32_t> intersect_;

  mutable std::vector<std::int8_t> nf_cache_;
  mutable std::optional<std::vector<Quad>> amalgams_;
  mutable std::unordered_map<std::size_t, std::vector<AtomMap>> embeddings_;
  mutable std::unordered_map<std::uint64_t, std::int32_t> prime_cache_;
  mutable std::unordered_map<std::uint64_t, std::int32_t> prime_in_cache_;
};

}  // namespace adequate

#endif  // ADEQUATE_FRAGMENT_HPP_
