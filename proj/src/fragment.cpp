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

#include "adequate/fragment.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace adequate {

const char* to_string(KernelErrc code) {
  switch (code) {
    case KernelErrc::kUnknownModel: return "UnknownModel";
    case KernelErrc::kInvalidEmbedding: return "InvalidEmbedding";
    case KernelErrc::kEmptyChain: return "EmptyChain";
    case KernelErrc::kNotAChain: return "NotAChain";
    case KernelErrc::kNotAVee: return "NotAVee";
    case KernelErrc::kFragmentTooLarge: return "FragmentTooLarge";
    case KernelErrc::kNotASemilattice: return "NotASemilattice";
  }
  return "KernelError";
}

namespace {

constexpr std::size_t kNfCacheLimit = std::size_t{1} << 25;

std::uint64_t pack(std::size_t a, std::size_t b, std::size_t c,
                   std::size_t d) {
  return (std::uint64_t{a} << 48) | (std::uint64_t{b} << 32) |
         (std::uint64_t{c} << 16) | std::uint64_t{d};
}

}  // namespace

Fragment::Fragment(std::shared_ptr<const ClassInstance> instance)
    : instance_(std::move(instance)) {
  for (Model& m : instance_->fragment()) {
    if (index_.count(m)) continue;
    index_.emplace(m, models_.size());
    models_.push_back(std::move(m));
  }
  if (models_.size() > kMaxModels) {
    throw KernelError(KernelErrc::kFragmentTooLarge,
                      std::to_string(models_.size()) + " models");
  }
  complete_ = instance_->fragment_complete();
  const std::size_t n = models_.size();
  sub_.assign(n * n, false);
  substructure_.assign(n * n, false);
  intersect_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sub_[i * n + j] = instance_->is_sub(models_[i], models_[j]);
      substructure_[i * n + j] =
          instance_->is_substructure(models_[i], models_[j]);
      if (auto meet = instance_->intersect(models_[i], models_[j])) {
        if (auto k = find(*meet)) intersect_[i * n + j] =
            static_cast<std::int32_t>(*k);
      }
    }
  }
  const std::size_t n4 = n * n * n * n;
  if (n4 <= kNfCacheLimit) nf_cache_.assign(n4, -1);
}

std::string Fragment::id(ModelIndex i) const {
  return "m" + std::to_string(i);
}

std::optional<ModelIndex> Fragment::find(const Model& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ModelIndex> Fragment::find_id(std::string_view id) const {
  if (id.size() < 2 || id[0] != 'm') return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), value);
  if (ec != std::errc() || ptr != id.data() + id.size()) return std::nullopt;
  if (value >= models_.size()) return std::nullopt;
  return value;
}

ModelIndex Fragment::require_id(std::string_view id) const {
  if (auto i = find_id(id)) return *i;
  throw KernelError(KernelErrc::kUnknownModel, std::string(id));
}

std::optional<ModelIndex> Fragment::intersect(ModelIndex m,
                                              ModelIndex n) const {
  const std::int32_t k = intersect_[m * size() + n];
  if (k < 0) return std::nullopt;
  return static_cast<ModelIndex>(k);
}

bool Fragment::nf(ModelIndex m0, ModelIndex m1, ModelIndex m2,
                  ModelIndex m3) const {
  if (nf_cache_.empty()) {
    return instance_->nf(models_[m0], models_[m1], models_[m2], models_[m3]);
  }
  const std::size_t n = size();
  std::int8_t& slot = nf_cache_[((m0 * n + m1) * n + m2) * n + m3];
  if (slot < 0) {
    slot = instance_->nf(models_[m0], models_[m1], models_[m2], models_[m3])
               ? 1
               : 0;
  }
  return slot == 1;
}

const std::vector<Quad>& Fragment::amalgams() const {
  if (!amalgams_) {
    std::vector<Quad> out;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d)
            if (nf(a, b, c, d)) out.push_back({a, b, c, d});
    amalgams_ = std::move(out);
  }
  return *amalgams_;
}

const std::vector<AtomMap>& Fragment::embeddings(ModelIndex m,
                                                 ModelIndex n) const {
  const std::size_t key = m * size() + n;
  auto it = embeddings_.find(key);
  if (it == embeddings_.end()) {
    it = embeddings_.emplace(key, instance_->embeddings(models_[m], models_[n]))
             .first;
  }
  return it->second;
}

std::optional<ModelIndex> Fragment::image_of(const AtomMap& map,
                                             ModelIndex target) const {
  const Model& t = models_[target];
  if (!subset_of(map.range(), t.carrier())) return std::nullopt;
  auto k = find(restrict(t, map.range(), signature()));
  if (!k || !sub(*k, target)) return std::nullopt;
  return k;
}

bool Fragment::for_each_k_embedding(
    const Model& source, ModelIndex target, const AtomMap& fixed,
    const std::function<bool(const AtomMap&)>& visit) const {
  return for_each_embedding(
      source, models_[target], signature(), fixed, [&](const AtomMap& f) {
        if (!image_of(f, target)) return true;
        return visit(f);
      });
}

std::optional<AtomMap> Fragment::find_k_embedding(const Model& source,
                                                  ModelIndex target,
                                                  const AtomMap& fixed) const {
  std::optional<AtomMap> found;
  for_each_k_embedding(source, target, fixed, [&](const AtomMap& f) {
    found = f;
    return false;
  });
  return found;
}

std::optional<AtomMap> Fragment::find_isomorphism(ModelIndex a, ModelIndex b,
                                                  const AtomMap& fixed) const {
  if (models_[a].size() != models_[b].size()) return std::nullopt;
  std::optional<AtomMap> found;
  for_each_embedding(models_[a], models_[b], signature(), fixed,
                     [&](const AtomMap& f) {
                       found = f;
                       return false;
                     });
  return found;
}

std::optional<ModelIndex> Fragment::prime_refutation(ModelIndex base,
                                                     ModelIndex left,
                                                     ModelIndex right,
                                                     ModelIndex p) const {
  const std::uint64_t key = pack(base, left, right, p);
  if (auto it = prime_cache_.find(key); it != prime_cache_.end()) {
    if (it->second < 0) return std::nullopt;
    return static_cast<ModelIndex>(it->second);
  }
  auto remember = [&](std::optional<ModelIndex> r) {
    prime_cache_[key] = r ? static_cast<std::int32_t>(*r) : -1;
    return r;
  };
  if (!nf(base, left, right, p)) return remember(p);

  const AtomSet base_atoms = models_[base].carrier();
  for (ModelIndex n = 0; n < size(); ++n) {
    for (const AtomMap& f1 : embeddings(left, n)) {
      const AtomMap on_base = f1.restricted(base_atoms);
      for (const AtomMap& f2 : embeddings(right, n)) {
        if (!(f2.restricted(base_atoms) == on_base)) continue;
        AtomMap both = f1.merged(f2);
        if (find_k_embedding(models_[p], n, both)) continue;
        // No extension: a refutation only if the images form a free vee.
        auto b_img = image_of(on_base, n);
        auto l_img = image_of(f1, n);
        auto r_img = image_of(f2, n);
        if (b_img && l_img && r_img && nf(*b_img, *l_img, *r_img, n)) {
          return remember(n);
        }
      }
    }
  }
  return remember(std::nullopt);
}

bool Fragment::is_prime_over_vee(ModelIndex base, ModelIndex left,
                                 ModelIndex right, ModelIndex p) const {
  return !prime_refutation(base, left, right, p).has_value();
}

std::optional<ModelIndex> Fragment::prime_in(ModelIndex base, ModelIndex left,
                                             ModelIndex right,
                                             ModelIndex ambient) const {
  const std::uint64_t key = pack(base, left, right, ambient);
  if (auto it = prime_in_cache_.find(key); it != prime_in_cache_.end()) {
    if (it->second < 0) return std::nullopt;
    return static_cast<ModelIndex>(it->second);
  }
  auto fits = [&](ModelIndex p) {
    return sub(p, ambient) && sub(left, p) && sub(right, p) &&
           is_prime_over_vee(base, left, right, p);
  };
  std::optional<ModelIndex> result;
  if (auto built = instance_->prime_over_vee(models_[base], models_[left],
                                             models_[right],
                                             models_[ambient])) {
    if (auto k = find(*built); k && fits(*k)) result = k;
  }
  if (!result) {
    std::vector<ModelIndex> order(size());
    std::iota(order.begin(), order.end(), ModelIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](ModelIndex x, ModelIndex y) {
                       return models_[x].size() < models_[y].size();
                     });
    for (ModelIndex p : order) {
      if (fits(p)) {
        result = p;
        break;
      }
    }
  }
  prime_in_cache_[key] = result ? static_cast<std::int32_t>(*result) : -1;
  return result;
}

}  // namespace adequate
