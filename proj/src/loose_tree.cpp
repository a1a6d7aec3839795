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

#include "adequate/loose_tree.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace adequate {

const char* to_string(LooseTreeErrc code) {
  switch (code) {
    case LooseTreeErrc::kIntersectionNotMember: return "IntersectionNotMember";
    case LooseTreeErrc::kIntersectionNotSubmodel:
      return "IntersectionNotSubmodel";
    case LooseTreeErrc::kNotInAmbient: return "NotInAmbient";
    case LooseTreeErrc::kAssignmentMismatch: return "AssignmentMismatch";
    case LooseTreeErrc::kEnumerationMismatch: return "EnumerationMismatch";
    case LooseTreeErrc::kNotFree: return "NotFree";
    case LooseTreeErrc::kNodesComparable: return "NodesComparable";
    case LooseTreeErrc::kNoPrimeInFragment: return "NoPrimeInFragment";
    case LooseTreeErrc::kPreconditionFailed: return "PreconditionFailed";
    case LooseTreeErrc::kValidationFailed: return "ValidationFailed";
    case LooseTreeErrc::kIntersectionCondition:
      return "IntersectionCondition";
    case LooseTreeErrc::kBoundExceeded: return "BoundExceeded";
    case LooseTreeErrc::kNotAnIdeal: return "NotAnIdeal";
  }
  return "LooseTreeError";
}

namespace {

[[noreturn]] void fail(LooseTreeErrc code, const std::string& detail) {
  throw LooseTreeError(code, detail);
}

std::string pos(std::size_t i) { return std::to_string(i); }

bool has_bit(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1U; }

}  // namespace

ModelIndex LooseTree::edge_base(std::size_t index) const {
  const auto p = shape.parent(index);
  if (!p) fail(LooseTreeErrc::kPreconditionFailed, "root has no edge");
  const auto m = frag->intersect(assign[index], assign[*p]);
  if (!m) {
    fail(LooseTreeErrc::kIntersectionNotMember, to_string(shape.node(index)));
  }
  return *m;
}

LooseTree make_loose_tree(std::shared_ptr<const Fragment> frag,
                          TreeShape shape, std::vector<ModelIndex> assign,
                          ModelIndex ambient) {
  if (assign.size() != shape.size()) {
    fail(LooseTreeErrc::kAssignmentMismatch,
         "assignment has " + pos(assign.size()) + " models for " +
             pos(shape.size()) + " nodes");
  }
  for (ModelIndex m : assign) {
    if (m >= frag->size()) fail(LooseTreeErrc::kAssignmentMismatch, "index");
  }
  if (ambient >= frag->size()) {
    fail(LooseTreeErrc::kAssignmentMismatch, "ambient index");
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (!frag->sub(assign[i], ambient)) {
      fail(LooseTreeErrc::kNotInAmbient, to_string(shape.node(i)));
    }
    const auto p = shape.parent(i);
    if (!p) continue;
    const auto m = frag->intersect(assign[i], assign[*p]);
    if (!m) {
      fail(LooseTreeErrc::kIntersectionNotMember,
           to_string(shape.node(i)) + " with " + to_string(shape.node(*p)));
    }
    if (!frag->sub(*m, assign[i]) || !frag->sub(*m, assign[*p])) {
      fail(LooseTreeErrc::kIntersectionNotSubmodel,
           to_string(shape.node(i)) + " with " + to_string(shape.node(*p)));
    }
  }
  return LooseTree{std::move(frag), std::move(shape), std::move(assign),
                   ambient};
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

// Position of each shape index in `order`.
std::vector<std::size_t> positions(const IndexOrder& order) {
  std::vector<std::size_t> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = i;
  return out;
}

void require_enumeration(const LooseTree& lt, const IndexOrder& order) {
  if (order.size() != lt.shape.size() || !is_enumeration(lt.shape, order)) {
    fail(LooseTreeErrc::kEnumerationMismatch,
         "order does not enumerate the tree");
  }
}

// One greedy step; nullopt when the vee is not free in `ambient` or no
// prime sits there.
std::optional<ModelIndex> greedy_step(const LooseTree& lt, std::size_t node,
                                      ModelIndex prev, ModelIndex ambient) {
  const Fragment& f = *lt.frag;
  const ModelIndex base = lt.edge_base(node);
  const ModelIndex m = lt.assign[node];
  if (!f.sub(base, prev) || !f.sub(prev, ambient)) return std::nullopt;
  if (!f.nf(base, m, prev, ambient)) return std::nullopt;
  return f.prime_in(base, m, prev, ambient);
}

std::optional<WitnessSequence> greedy(const LooseTree& lt,
                                      const IndexOrder& order,
                                      std::vector<ModelIndex> models,
                                      ModelIndex ambient) {
  if (models.empty()) models.push_back(lt.assign[order[0]]);
  for (std::size_t i = models.size(); i < order.size(); ++i) {
    const auto n = greedy_step(lt, order[i], models.back(), ambient);
    if (!n) return std::nullopt;
    models.push_back(*n);
  }
  return WitnessSequence{std::move(models), order};
}

}  // namespace

WitnessCheck validate_witness(const LooseTree& lt, const WitnessSequence& w) {
  require_enumeration(lt, w.order);
  WitnessCheck out;
  const Fragment& f = *lt.frag;
  const auto& n = w.models;
  auto basic = [&]() -> std::string {
    if (n.size() != w.order.size()) return "(length) sequence length differs";
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] >= f.size()) return "(length) unknown model at " + pos(i);
      if (!f.sub(n[i], lt.ambient)) {
        return "(i) N_" + pos(i) + " not below the ambient";
      }
    }
    if (n[0] != lt.assign[w.order[0]]) return "(ii) N_0 is not M_{t_0}";
    for (std::size_t i = 1; i < n.size(); ++i) {
      const std::size_t t = w.order[i];
      const ModelIndex base = lt.edge_base(t);
      if (!f.nf(base, lt.assign[t], n[i - 1], n[i])) {
        return "(iii) no free amalgam at position " + pos(i);
      }
    }
    return {};
  };
  out.failure = basic();
  out.basic = out.failure.empty();
  if (!out.basic) {
    out.refined_failure = out.failure;
    return out;
  }
  for (std::size_t i = 1; i < n.size(); ++i) {
    const std::size_t t = w.order[i];
    if (!f.is_prime_over_vee(lt.edge_base(t), lt.assign[t], n[i - 1], n[i])) {
      out.refined_failure = "N_" + pos(i) + " is not prime over the vee";
      break;
    }
  }
  out.refined = out.refined_failure.empty();
  return out;
}

std::optional<WitnessSequence> find_witness(const LooseTree& lt,
                                            const IndexOrder& order) {
  require_enumeration(lt, order);
  return greedy(lt, order, {}, lt.ambient);
}

std::optional<WitnessSequence> extend_witness(const LooseTree& lt,
                                              const IndexOrder& order,
                                              const WitnessSequence& prefix) {
  require_enumeration(lt, order);
  if (prefix.models.empty() || prefix.models.size() > order.size() ||
      !std::equal(prefix.order.begin(), prefix.order.end(), order.begin())) {
    fail(LooseTreeErrc::kEnumerationMismatch, "prefix does not match order");
  }
  return greedy(lt, order, prefix.models, lt.ambient);
}

std::optional<AlmostFreeWitness> find_almost_free_witness(
    const LooseTree& lt, const IndexOrder& order) {
  require_enumeration(lt, order);
  if (auto w = greedy(lt, order, {}, lt.ambient)) {
    return AlmostFreeWitness{std::move(*w), lt.ambient};
  }
  const Fragment& f = *lt.frag;
  for (ModelIndex big = 0; big < f.size(); ++big) {
    if (big == lt.ambient || !f.sub(lt.ambient, big)) continue;
    if (auto w = greedy(lt, order, {}, big)) {
      return AlmostFreeWitness{std::move(*w), big};
    }
  }
  return std::nullopt;
}

bool is_free(const LooseTree& lt, const IndexOrder& order) {
  return find_witness(lt, order).has_value();
}

bool is_free(const LooseTree& lt) {
  for (const IndexOrder& order : all_enumeration_orders(lt.shape, 64)) {
    if (is_free(lt, order)) return true;
  }
  return false;
}

FreeReport check_free_all_enumerations(const LooseTree& lt,
                                       std::size_t bound) {
  if (lt.shape.size() > bound) {
    fail(LooseTreeErrc::kBoundExceeded,
         pos(lt.shape.size()) + " nodes, bound " + pos(bound));
  }
  FreeReport out;
  out.orders = all_enumeration_orders(lt.shape, bound);
  for (const IndexOrder& order : out.orders) {
    const bool free = is_free(lt, order);
    out.free.push_back(free);
    if (free) ++out.free_count;
  }
  out.agree = out.free_count == 0 || out.free_count == out.orders.size();
  return out;
}

ModelIndex explicit_prime(const LooseTree& lt, const IndexOrder& order) {
  const auto w = find_witness(lt, order);
  if (!w) fail(LooseTreeErrc::kNotFree, "no witness for this enumeration");
  return w->models.back();
}

bool isomorphic_over_tree(const LooseTree& lt, ModelIndex p, ModelIndex q) {
  const Fragment& f = *lt.frag;
  AtomSet atoms = 0;
  for (ModelIndex m : lt.assign) atoms |= f.model(m).carrier();
  const AtomMap fixed = AtomMap::identity(atoms);
  if (!subset_of(atoms, f.model(p).carrier()) ||
      !subset_of(atoms, f.model(q).carrier())) {
    return false;
  }
  return f.find_isomorphism(p, q, fixed).has_value() &&
         f.find_isomorphism(q, p, fixed).has_value();
}

// ---------------------------------------------------------------------------
// Transformations

WitnessSequence swap_transform(const LooseTree& lt, const WitnessSequence& w,
                               std::size_t i) {
  require_enumeration(lt, w.order);
  if (i == 0 || i + 1 >= w.order.size()) {
    fail(LooseTreeErrc::kPreconditionFailed,
         "swap position " + pos(i) + " out of range");
  }
  const std::size_t a = w.order[i];
  const std::size_t b = w.order[i + 1];
  if (lt.shape.comparable(a, b)) {
    fail(LooseTreeErrc::kNodesComparable, to_string(lt.shape.node(a)) +
                                              " and " +
                                              to_string(lt.shape.node(b)));
  }
  if (!validate_witness(lt, w).basic) {
    fail(LooseTreeErrc::kPreconditionFailed, "input witness invalid");
  }
  const Fragment& f = *lt.frag;
  const ModelIndex base_b = lt.edge_base(b);
  const auto mid =
      f.prime_in(base_b, lt.assign[b], w.models[i - 1], w.models[i + 1]);
  if (!mid) {
    fail(LooseTreeErrc::kNoPrimeInFragment, "at position " + pos(i));
  }
  WitnessSequence out = w;
  std::swap(out.order[i], out.order[i + 1]);
  out.models[i] = *mid;
  const WitnessCheck check = validate_witness(lt, out);
  if (!check.basic) fail(LooseTreeErrc::kValidationFailed, check.failure);
  return out;
}

LooseTree substitute(const LooseTree& lt, const TreeNode& s, ModelIndex n) {
  const Fragment& f = *lt.frag;
  const std::size_t si = lt.shape.require_index(s);
  if (n >= f.size()) fail(LooseTreeErrc::kAssignmentMismatch, "index");
  if (!f.sub(n, lt.ambient)) fail(LooseTreeErrc::kNotInAmbient, "N");
  for (std::size_t t = 0; t < lt.shape.size(); ++t) {
    const auto p = lt.shape.parent(t);
    const bool adjacent = (p && *p == si) || lt.shape.parent(si) == t;
    if (!adjacent || t == si) continue;
    const auto m = f.intersect(n, lt.assign[t]);
    if (!m || !f.sub(*m, n) || !f.sub(*m, lt.assign[t])) {
      fail(LooseTreeErrc::kIntersectionCondition, to_string(lt.shape.node(t)));
    }
  }
  std::vector<ModelIndex> assign = lt.assign;
  assign[si] = n;
  return make_loose_tree(lt.frag, lt.shape, std::move(assign), lt.ambient);
}

OmissionResult omission_transform(const LooseTree& lt,
                                  const WitnessSequence& w,
                                  const TreeNode& r) {
  require_enumeration(lt, w.order);
  const std::size_t ri = lt.shape.require_index(r);
  const auto si = lt.shape.parent(ri);
  if (!si) fail(LooseTreeErrc::kPreconditionFailed, "r is the root");
  const Fragment& f = *lt.frag;
  if (!f.sub(lt.assign[*si], lt.assign[ri])) {
    fail(LooseTreeErrc::kPreconditionFailed, "M_s is not below M_r");
  }
  if (!validate_witness(lt, w).basic) {
    fail(LooseTreeErrc::kPreconditionFailed, "input witness invalid");
  }

  // Move r right behind s; r's descendants stay behind it.
  IndexOrder target = w.order;
  target.erase(std::find(target.begin(), target.end(), ri));
  const auto at_s = std::find(target.begin(), target.end(), *si);
  target.insert(at_s + 1, ri);

  OmissionResult out{lt, w, {}};
  out.swaps = neighbor_path(lt.shape, w.order, target);
  WitnessSequence current = w;
  for (std::size_t step : out.swaps) current = swap_transform(lt, current, step);

  const std::size_t j = positions(current.order)[*si];
  std::vector<TreeNode> nodes;
  for (std::size_t t = 0; t < lt.shape.size(); ++t) {
    if (t != ri) nodes.push_back(lt.shape.node(t));
  }
  TreeShape shape = TreeShape::from_nodes(nodes);
  std::vector<ModelIndex> assign(shape.size());
  for (std::size_t t = 0; t < lt.shape.size(); ++t) {
    if (t == ri) continue;
    assign[shape.require_index(lt.shape.node(t))] =
        t == *si ? lt.assign[ri] : lt.assign[t];
  }
  LooseTree smaller = [&] {
    try {
      return make_loose_tree(lt.frag, shape, std::move(assign), lt.ambient);
    } catch (const LooseTreeError& e) {
      fail(LooseTreeErrc::kValidationFailed, e.what());
    }
  }();

  WitnessSequence next;
  for (std::size_t l = 0; l < current.order.size(); ++l) {
    if (l == j + 1) continue;  // r's slot
    next.order.push_back(
        smaller.shape.require_index(lt.shape.node(current.order[l])));
  }
  for (std::size_t l = 0; l < current.models.size(); ++l) {
    if (l != j) next.models.push_back(current.models[l]);
  }
  const WitnessCheck check = validate_witness(smaller, next);
  if (!check.basic) fail(LooseTreeErrc::kValidationFailed, check.failure);
  out.tree = std::move(smaller);
  out.witness = std::move(next);
  return out;
}

SubstitutionReport substitute_prime_node_check(const LooseTree& lt,
                                               const TreeNode& v) {
  const std::size_t vi = lt.shape.require_index(v);
  const auto p = lt.shape.parent(vi);
  if (!p) fail(LooseTreeErrc::kPreconditionFailed, "v is the root");
  if (!is_free(lt)) fail(LooseTreeErrc::kNotFree, "input loose tree");
  const Fragment& f = *lt.frag;
  SubstitutionReport out;
  const ModelIndex base = lt.edge_base(vi);
  out.vee_free = f.nf(base, lt.assign[vi], lt.assign[*p], lt.ambient);
  if (!out.vee_free) {
    out.pass = true;
    out.note = "vee not free in the ambient; vacuous";
    return out;
  }
  out.prime = f.prime_in(base, lt.assign[vi], lt.assign[*p], lt.ambient);
  if (!out.prime) {
    fail(LooseTreeErrc::kNoPrimeInFragment, "over M_v and its predecessor");
  }
  const LooseTree replaced = substitute(lt, v, *out.prime);
  out.freeness = check_free_all_enumerations(replaced);
  out.pass = out.freeness.free_count == out.freeness.orders.size();
  return out;
}

// ---------------------------------------------------------------------------
// Ideals and quotients

LooseTree restrict_to(const LooseTree& lt, std::uint64_t mask) {
  if (!has_bit(mask, 0) || !is_ideal(lt.shape, mask)) {
    fail(LooseTreeErrc::kNotAnIdeal, "restriction needs a nonempty ideal");
  }
  std::vector<TreeNode> nodes;
  for (std::size_t t = 0; t < lt.shape.size(); ++t) {
    if (has_bit(mask, t)) nodes.push_back(lt.shape.node(t));
  }
  TreeShape shape = TreeShape::from_nodes(nodes);
  std::vector<ModelIndex> assign(shape.size());
  for (std::size_t t = 0; t < shape.size(); ++t) {
    assign[t] = lt.at(lt.shape.require_index(shape.node(t)));
  }
  return make_loose_tree(lt.frag, std::move(shape), std::move(assign),
                         lt.ambient);
}

namespace {

TreeShape quotient_shape(const TreeShape& shape, std::uint64_t mask) {
  std::vector<TreeNode> ideal;
  std::vector<TreeNode> rest{TreeNode{}};
  for (std::size_t t = 0; t < shape.size(); ++t) {
    (has_bit(mask, t) ? ideal : rest).push_back(shape.node(t));
  }
  try {
    const Tree tree = Tree::validate(shape.nodes(), TreeBounds{64, 64, 64});
    return TreeShape::of(quotient(tree, ideal));
  } catch (const TreeError&) {
    // Not prefix closed (say, after an omission): parents are the nearest
    // surviving prefixes, which is what the quotient's meets give.
    return TreeShape::from_nodes(rest);
  }
}

}  // namespace

QuotientReport quotient_check(const LooseTree& lt, std::uint64_t mask,
                              std::size_t bound) {
  if (lt.shape.size() > bound) {
    fail(LooseTreeErrc::kBoundExceeded,
         pos(lt.shape.size()) + " nodes, bound " + pos(bound));
  }
  if (!has_bit(mask, 0) || !is_ideal(lt.shape, mask)) {
    fail(LooseTreeErrc::kNotAnIdeal, "ideal must be nonempty and closed");
  }
  if (!is_free(lt)) fail(LooseTreeErrc::kNotFree, "input loose tree");
  const LooseTree part = restrict_to(lt, mask);
  const TreeShape qshape = quotient_shape(lt.shape, mask);

  QuotientReport out;
  out.pass = true;
  for (const IndexOrder& order : all_enumeration_orders(part.shape, bound)) {
    QuotientCase c;
    c.ideal_order = order;
    const auto wi = find_witness(part, order);
    if (wi) {
      c.prime = wi->models.back();
      std::vector<ModelIndex> qassign(qshape.size());
      for (std::size_t t = 0; t < qshape.size(); ++t) {
        qassign[t] = t == 0 ? *c.prime
                            : lt.at(lt.shape.require_index(qshape.node(t)));
      }
      try {
        const LooseTree q =
            make_loose_tree(lt.frag, qshape, std::move(qassign), lt.ambient);
        c.quotient_free = is_free(q);
      } catch (const LooseTreeError&) {
        c.quotient_free = false;
      }

      // Extend along the ideal's order followed by any order of T - I.
      IndexOrder head;
      for (std::size_t k : order) {
        head.push_back(lt.shape.require_index(part.shape.node(k)));
      }
      WitnessSequence prefix{wi->models, head};
      for (const IndexOrder& full : all_enumeration_orders(lt.shape, bound)) {
        if (!std::equal(head.begin(), head.end(), full.begin())) continue;
        const auto w = extend_witness(lt, full, prefix);
        if (w && validate_witness(lt, *w).basic) {
          c.extends = true;
          c.full_witness = w;
          break;
        }
      }
    }
    if (!c.quotient_free || !c.extends) out.pass = false;
    out.cases.push_back(std::move(c));
  }
  return out;
}

QuotientReport quotient_check(const LooseTree& lt, const Ideal& ideal,
                              std::size_t bound) {
  std::uint64_t mask = 0;
  for (const TreeNode& node : ideal) {
    const auto i = lt.shape.index_of(node);
    if (!i) fail(LooseTreeErrc::kNotAnIdeal, to_string(node) + " not in tree");
    mask |= std::uint64_t{1} << *i;
  }
  return quotient_check(lt, mask, bound);
}

bool is_locally_free(const LooseTree& lt, std::size_t bound) {
  if (lt.shape.size() > bound) {
    fail(LooseTreeErrc::kBoundExceeded,
         pos(lt.shape.size()) + " nodes, bound " + pos(bound));
  }
  for (std::uint64_t mask : all_ideals(lt.shape)) {
    if (!has_bit(mask, 0)) continue;
    if (!is_free(restrict_to(lt, mask))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LFP and the conclusion

namespace {

// Visits per-node embeddings g_t : M_t -> n whose union is one injective map.
bool for_each_consistent_family(
    const LooseTree& lt, ModelIndex n,
    const std::function<bool(const AtomMap&)>& visit) {
  const Fragment& f = *lt.frag;
  std::function<bool(std::size_t, const AtomMap&)> step =
      [&](std::size_t t, const AtomMap& acc) -> bool {
    if (t == lt.shape.size()) return visit(acc);
    const Model& mt = f.model(lt.assign[t]);
    return f.for_each_k_embedding(mt, n, acc, [&](const AtomMap& g) {
      if (!acc.compatible(g)) return true;
      return step(t + 1, acc.merged(g));
    });
  };
  return step(0, AtomMap{});
}

// Compatibility of (m, inclusions) and (n, g) over the tree.
bool compatible_over_tree(const LooseTree& lt, ModelIndex m, ModelIndex n,
                          const AtomMap& g) {
  const Fragment& f = *lt.frag;
  AtomSet atoms = 0;
  for (ModelIndex x : lt.assign) atoms |= f.model(x).carrier();
  for (ModelIndex big = 0; big < f.size(); ++big) {
    for (const AtomMap& h1 : f.embeddings(m, big)) {
      // h2 (g a) = h1 a for every a in the tree's atoms.
      AtomMap fixed;
      for (Atom a : atoms_of(atoms)) fixed.set(g.at(a), h1.at(a));
      if (f.find_k_embedding(f.model(n), big, fixed)) return true;
    }
  }
  return false;
}

}  // namespace

PrimalityResult lfp_check(const LooseTree& lt, ModelIndex m) {
  const Fragment& f = *lt.frag;
  PrimalityResult out;
  const LooseTree inside = make_loose_tree(lt.frag, lt.shape, lt.assign, m);
  if (!is_locally_free(inside)) {
    out.verdict = Verdict::kFail;
    out.refuting = m;
    return out;
  }
  for (ModelIndex n = 0; n < f.size(); ++n) {
    const bool done = !for_each_consistent_family(lt, n, [&](const AtomMap& g) {
      ++out.extensions_checked;
      if (f.find_k_embedding(f.model(m), n, g)) return true;
      // The image tree inside n.
      std::vector<ModelIndex> image(lt.shape.size());
      for (std::size_t t = 0; t < lt.shape.size(); ++t) {
        const auto part =
            f.image_of(g.restricted(f.model(lt.assign[t]).carrier()), n);
        if (!part) return true;  // not a K-submodel: not an embedding
        image[t] = *part;
      }
      try {
        const LooseTree target =
            make_loose_tree(lt.frag, lt.shape, std::move(image), n);
        if (!is_locally_free(target)) return true;
      } catch (const LooseTreeError&) {
        return true;
      }
      if (!compatible_over_tree(lt, m, n, g)) return true;
      out.verdict = Verdict::kFail;
      out.refuting = n;
      return false;
    });
    if (done) break;
  }
  if (out.verdict != Verdict::kFail && !f.complete()) {
    out.verdict = Verdict::kInconclusive;
  }
  return out;
}

ConclusionReport check_conclusion(const LooseTree& lt, std::size_t bound) {
  ConclusionReport out;
  out.freeness = check_free_all_enumerations(lt, bound);
  out.free = out.freeness.free_count > 0;
  if (!out.free) {
    out.verdict = Verdict::kPass;
    out.note = "not free; conclusion vacuous";
    return out;
  }
  if (!out.freeness.agree) {
    out.verdict = Verdict::kFail;
    out.note = "freeness depends on the enumeration";
    return out;
  }
  out.prime = explicit_prime(lt, out.freeness.orders.front());
  for (const IndexOrder& order : out.freeness.orders) {
    if (!isomorphic_over_tree(lt, *out.prime, explicit_prime(lt, order))) {
      out.verdict = Verdict::kFail;
      out.note = "explicit primes differ between enumerations";
      return out;
    }
  }
  out.lfp = lfp_check(lt, *out.prime);
  out.verdict = out.lfp.verdict;
  if (out.verdict == Verdict::kFail) out.note = "prime fails LFP";
  return out;
}

}  // namespace adequate
