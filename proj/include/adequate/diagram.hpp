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

// Diagrams of fragment members indexed by a finite lower semilattice,
// embeddings of diagrams, compatibility and the bounded primality tests.

#ifndef ADEQUATE_DIAGRAM_HPP_
#define ADEQUATE_DIAGRAM_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adequate/fragment.hpp"
#include "adequate/report.hpp"

namespace adequate {

struct Diagram {
  std::vector<ModelIndex> models;
  // leq[x][y]: index x lies below index y. Reflexive.
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return models.size(); }
  // Greatest lower bound of two indices; throws if there is none.
  std::size_t meet(std::size_t x, std::size_t y) const;
};

// One atom map per diagram index, all into a common target.
struct DiagramEmbedding {
  std::vector<AtomMap> maps;
};

// Checks M_x <= M_y along the index order; throws KernelError.
void validate_diagram(const Fragment& frag, const Diagram& d);

Diagram make_vee(const Fragment& frag, ModelIndex m0, ModelIndex m1,
                 ModelIndex m2);
Diagram make_chain(const Fragment& frag, const std::vector<ModelIndex>& chain);

// Identity maps of every member of d into the target.
DiagramEmbedding identity_embedding(const Fragment& frag, const Diagram& d);

// Each map is a K-embedding into `target` and f_y extends f_x for x <= y.
// Throws InvalidEmbedding otherwise.
void validate_embedding(const Fragment& frag, const Diagram& d,
                        ModelIndex target, const DiagramEmbedding& f);

// The image diagram is stable inside `target`: for all x, y the images of
// M_x and M_y are free over the image of M_{x meet y}.
bool is_stable(const Fragment& frag, const Diagram& d, ModelIndex target,
               const DiagramEmbedding& f);

// Visits every stable embedding of d into target. Returns false iff the
// visitor stopped early.
bool for_each_stable_embedding(
    const Fragment& frag, const Diagram& d, ModelIndex target,
    const std::function<bool(const DiagramEmbedding&)>& visit);

struct CompatibilityWitness {
  ModelIndex n;
  AtomMap g1;
  AtomMap g2;
};

// Searches N, g1 : M1 -> N, g2 : M2 -> N with g1 f1 = g2 f2 on the diagram.
std::optional<CompatibilityWitness> compatible_over(
    const Fragment& frag, const Diagram& d, ModelIndex m1,
    const DiagramEmbedding& f1, ModelIndex m2, const DiagramEmbedding& f2);

struct PrimalityResult {
  Verdict verdict = Verdict::kPass;
  // On FAIL: the extension M' the candidate does not embed into.
  std::optional<ModelIndex> refuting;
  std::size_t extensions_checked = 0;
};

// M is compatibility prime over (d, f): every stable embedding f' into a
// fragment member M' compatible with (M, f) factors through some g with
// g f = f'. A refutation is always a FAIL; a clean run is INCONCLUSIVE on
// an incomplete fragment.
PrimalityResult is_compatibility_prime(const Fragment& frag, const Diagram& d,
                                       ModelIndex m,
                                       const DiagramEmbedding& f);
// Same without the compatibility side condition.
PrimalityResult is_absolutely_prime(const Fragment& frag, const Diagram& d,
                                    ModelIndex m, const DiagramEmbedding& f);

// The canonically prime model over a finite chain: its maximum.
ModelIndex cpr_finite(const Fragment& frag,
                      const std::vector<ModelIndex>& chain);

}  // namespace adequate

#endif  // ADEQUATE_DIAGRAM_HPP_
