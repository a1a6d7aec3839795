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

#include "adequate/diagram.hpp"

namespace adequate {

std::size_t Diagram::meet(std::size_t x, std::size_t y) const {
  std::optional<std::size_t> best;
  for (std::size_t z = 0; z < size(); ++z) {
    if (!leq[z][x] || !leq[z][y]) continue;
    if (!best || leq[*best][z]) best = z;
  }
  if (best) {
    for (std::size_t z = 0; z < size(); ++z) {
      if (leq[z][x] && leq[z][y] && !leq[z][*best]) best.reset();
      if (!best) break;
    }
  }
  if (!best) {
    throw KernelError(KernelErrc::kNotASemilattice,
                      "indices " + std::to_string(x) + " and " +
                          std::to_string(y) + " have no meet");
  }
  return *best;
}

void validate_diagram(const Fragment& frag, const Diagram& d) {
  if (d.leq.size() != d.size()) {
    throw KernelError(KernelErrc::kInvalidEmbedding, "order has wrong size");
  }
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d.models[x] >= frag.size()) {
      throw KernelError(KernelErrc::kUnknownModel, std::to_string(d.models[x]));
    }
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (d.leq[x][y] && !frag.sub(d.models[x], d.models[y])) {
        throw KernelError(KernelErrc::kInvalidEmbedding,
                          frag.id(d.models[x]) + " is not below " +
                              frag.id(d.models[y]));
      }
    }
  }
}

Diagram make_vee(const Fragment& frag, ModelIndex m0, ModelIndex m1,
                 ModelIndex m2) {
  if (!frag.sub(m0, m1) || !frag.sub(m0, m2)) {
    throw KernelError(KernelErrc::kNotAVee, frag.id(m0) + " is not below " +
                                                frag.id(m1) + " and " +
                                                frag.id(m2));
  }
  Diagram d;
  d.models = {m0, m1, m2};
  d.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  return d;
}

Diagram make_chain(const Fragment& frag, const std::vector<ModelIndex>& chain) {
  if (chain.empty()) throw KernelError(KernelErrc::kEmptyChain, "");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!frag.sub(chain[i], chain[i + 1])) {
      throw KernelError(KernelErrc::kNotAChain,
                        frag.id(chain[i]) + " is not below " +
                            frag.id(chain[i + 1]));
    }
  }
  Diagram d;
  d.models = chain;
  d.leq.assign(chain.size(), std::vector<bool>(chain.size(), false));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i; j < chain.size(); ++j) d.leq[i][j] = true;
  }
  return d;
}

DiagramEmbedding identity_embedding(const Fragment& frag, const Diagram& d) {
  DiagramEmbedding f;
  for (ModelIndex m : d.models) {
    f.maps.push_back(AtomMap::identity(frag.model(m).carrier()));
  }
  return f;
}

namespace {

bool agrees_below(const Fragment& frag, const Diagram& d,
                  const DiagramEmbedding& f, std::size_t x, std::size_t y) {
  // x <= y: f_y restricted to M_x is f_x.
  return f.maps[y].restricted(frag.model(d.models[x]).carrier()) == f.maps[x];
}

// Adds the pairs (from(a), to(a)) to `fixed`; false on a clash.
bool add_pairs(AtomMap& fixed, const AtomMap& from, const AtomMap& to) {
  for (Atom a : atoms_of(from.domain())) {
    if (!to.defined(a)) return false;
    const Atom src = from.at(a);
    const Atom dst = to.at(a);
    if (fixed.defined(src)) {
      if (fixed.at(src) != dst) return false;
      continue;
    }
    if (fixed.range() & singleton(dst)) return false;
    fixed.set(src, dst);
  }
  return true;
}

}  // namespace

void validate_embedding(const Fragment& frag, const Diagram& d,
                        ModelIndex target, const DiagramEmbedding& f) {
  if (f.maps.size() != d.size()) {
    throw KernelError(KernelErrc::kInvalidEmbedding, "wrong number of maps");
  }
  for (std::size_t x = 0; x < d.size(); ++x) {
    const Model& source = frag.model(d.models[x]);
    const AtomMap& map = f.maps[x];
    bool ok = map.domain() == source.carrier() &&
              cardinality(map.range()) == source.size();
    if (ok) {
      // Must be one of the K-embeddings of M_x into the target.
      ok = false;
      for (const AtomMap& e : frag.embeddings(d.models[x], target)) {
        if (e == map) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) {
      throw KernelError(KernelErrc::kInvalidEmbedding,
                        "map " + std::to_string(x) + " is not a K-embedding of " +
                            frag.id(d.models[x]) + " into " + frag.id(target));
    }
  }
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (x != y && d.leq[x][y] && !agrees_below(frag, d, f, x, y)) {
        throw KernelError(KernelErrc::kInvalidEmbedding,
                          "maps " + std::to_string(x) + " and " +
                              std::to_string(y) + " do not commute");
      }
    }
  }
}

bool is_stable(const Fragment& frag, const Diagram& d, ModelIndex target,
               const DiagramEmbedding& f) {
  std::vector<ModelIndex> image(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) {
    auto k = frag.image_of(f.maps[x], target);
    if (!k) return false;
    image[x] = *k;
  }
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = x + 1; y < d.size(); ++y) {
      const std::size_t z = d.meet(x, y);
      if (!frag.nf(image[z], image[x], image[y], target)) return false;
    }
  }
  return true;
}

bool for_each_stable_embedding(
    const Fragment& frag, const Diagram& d, ModelIndex target,
    const std::function<bool(const DiagramEmbedding&)>& visit) {
  DiagramEmbedding f;
  f.maps.resize(d.size());
  std::function<bool(std::size_t)> extend = [&](std::size_t x) -> bool {
    if (x == d.size()) {
      if (!is_stable(frag, d, target, f)) return true;
      return visit(f);
    }
    for (const AtomMap& e : frag.embeddings(d.models[x], target)) {
      f.maps[x] = e;
      bool ok = true;
      for (std::size_t y = 0; y < x && ok; ++y) {
        if (d.leq[y][x]) ok = agrees_below(frag, d, f, y, x);
        if (ok && d.leq[x][y]) ok = agrees_below(frag, d, f, x, y);
      }
      if (ok && !extend(x + 1)) return false;
    }
    return true;
  };
  return extend(0);
}

std::optional<CompatibilityWitness> compatible_over(
    const Fragment& frag, const Diagram& d, ModelIndex m1,
    const DiagramEmbedding& f1, ModelIndex m2, const DiagramEmbedding& f2) {
  validate_embedding(frag, d, m1, f1);
  validate_embedding(frag, d, m2, f2);
  for (ModelIndex n = 0; n < frag.size(); ++n) {
    for (const AtomMap& g1 : frag.embeddings(m1, n)) {
      // g2 must send f2_x(a) to g1(f1_x(a)).
      AtomMap fixed;
      bool ok = true;
      for (std::size_t x = 0; x < d.size() && ok; ++x) {
        ok = add_pairs(fixed, f2.maps[x], f1.maps[x].then(g1));
      }
      if (!ok) continue;
      if (auto g2 = frag.find_k_embedding(frag.model(m2), n, fixed)) {
        return CompatibilityWitness{n, g1, *g2};
      }
    }
  }
  return std::nullopt;
}

namespace {

PrimalityResult check_prime(const Fragment& frag, const Diagram& d,
                            ModelIndex m, const DiagramEmbedding& f,
                            bool need_compatible) {
  validate_embedding(frag, d, m, f);
  PrimalityResult result;
  for (ModelIndex other = 0; other < frag.size() && !result.refuting;
       ++other) {
    for_each_stable_embedding(
        frag, d, other, [&](const DiagramEmbedding& f2) {
          ++result.extensions_checked;
          AtomMap fixed;
          bool ok = true;
          for (std::size_t x = 0; x < d.size() && ok; ++x) {
            ok = add_pairs(fixed, f.maps[x], f2.maps[x]);
          }
          if (ok && frag.find_k_embedding(frag.model(m), other, fixed)) {
            return true;
          }
          if (need_compatible && !compatible_over(frag, d, m, f, other, f2)) {
            return true;
          }
          result.refuting = other;
          return false;
        });
  }
  if (result.refuting) {
    result.verdict = Verdict::kFail;
  } else {
    result.verdict = frag.complete() ? Verdict::kPass : Verdict::kInconclusive;
  }
  return result;
}

}  // namespace

PrimalityResult is_compatibility_prime(const Fragment& frag, const Diagram& d,
                                       ModelIndex m,
                                       const DiagramEmbedding& f) {
  return check_prime(frag, d, m, f, true);
}

PrimalityResult is_absolutely_prime(const Fragment& frag, const Diagram& d,
                                    ModelIndex m, const DiagramEmbedding& f) {
  return check_prime(frag, d, m, f, false);
}

ModelIndex cpr_finite(const Fragment& frag,
                      const std::vector<ModelIndex>& chain) {
  make_chain(frag, chain);
  return chain.back();
}

}  // namespace adequate
