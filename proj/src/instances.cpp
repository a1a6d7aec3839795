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

#include "adequate/instances.hpp"

#include <algorithm>
#include <set>

namespace adequate {

const char* to_string(InstanceErrc code) {
  switch (code) {
    case InstanceErrc::kUniverseTooLarge: return "UniverseTooLarge";
    case InstanceErrc::kDimTooLarge: return "DimTooLarge";
    case InstanceErrc::kUnknownInstance: return "UnknownInstance";
    case InstanceErrc::kConfigParse: return "ConfigParse";
  }
  return "InstanceError";
}

// ---------------------------------------------------------------------------
// DisjointSets

DisjointSets::DisjointSets(std::vector<std::string> universe)
    : universe_(std::move(universe)) {
  if (universe_.size() > kMaxUniverse) {
    throw InstanceError(InstanceErrc::kUniverseTooLarge,
                        std::to_string(universe_.size()) + " atoms");
  }
  std::set<std::string> seen(universe_.begin(), universe_.end());
  if (seen.size() != universe_.size()) {
    throw InstanceError(InstanceErrc::kConfigParse, "duplicate atom name");
  }
}

AtomSet DisjointSets::universe_mask() const {
  return (AtomSet{1} << universe_.size()) - 1;
}

std::vector<Model> DisjointSets::fragment() const {
  std::vector<Model> out;
  for (AtomSet s = 0; s <= universe_mask(); ++s) out.push_back(set(s));
  return out;
}

bool DisjointSets::is_member(const Model& m) const {
  return m.facts().empty() && subset_of(m.carrier(), universe_mask());
}

bool DisjointSets::is_sub(const Model& m, const Model& n) const {
  return is_member(m) && is_member(n) && subset_of(m.carrier(), n.carrier());
}

bool DisjointSets::nf(const Model& m0, const Model& m1, const Model& m2,
                      const Model& m3) const {
  return is_sub(m0, m1) && is_sub(m1, m3) && is_sub(m0, m2) &&
         is_sub(m2, m3) && (m1.carrier() & m2.carrier()) == m0.carrier();
}

std::optional<Model> DisjointSets::prime_over_vee(const Model&,
                                                  const Model& m1,
                                                  const Model& m2,
                                                  const Model& m3) const {
  const AtomSet u = m1.carrier() | m2.carrier();
  if (!subset_of(u, m3.carrier())) return std::nullopt;
  return set(u);
}

std::string DisjointSets::atom_name(Atom a) const {
  if (a < universe_.size()) return universe_[a];
  return ClassInstance::atom_name(a);
}

// ---------------------------------------------------------------------------
// VectorSpaceF2

VectorSpaceF2::VectorSpaceF2(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw InstanceError(InstanceErrc::kDimTooLarge, std::to_string(dim));
  }
  signature_ = {{"add", 3}};
}

Model VectorSpaceF2::subspace(AtomSet carrier) const {
  std::vector<Fact> facts;
  for (Atom x : atoms_of(carrier)) {
    for (Atom y : atoms_of(carrier)) {
      const auto z = static_cast<Atom>(x ^ y);
      if (carrier & singleton(z)) facts.push_back({0, {x, y, z}});
    }
  }
  return Model(carrier, std::move(facts));
}

Model VectorSpaceF2::span(const std::vector<unsigned>& vectors) const {
  AtomSet carrier = singleton(0);
  for (unsigned v : vectors) {
    AtomSet next = carrier;
    for (Atom x : atoms_of(carrier)) next |= singleton(static_cast<Atom>(x ^ v));
    carrier = next;
  }
  return subspace(carrier);
}

int VectorSpaceF2::dimension(AtomSet carrier) {
  return std::countr_zero(static_cast<std::uint64_t>(cardinality(carrier)));
}

std::vector<Model> VectorSpaceF2::fragment() const {
  const unsigned n = 1u << dim_;
  std::set<AtomSet> spaces;
  // Closure of every subset of vectors would be 2^16 at dim 4; grow spans
  // instead.
  std::vector<AtomSet> frontier = {singleton(0)};
  spaces.insert(singleton(0));
  while (!frontier.empty()) {
    std::vector<AtomSet> next;
    for (AtomSet s : frontier) {
      for (unsigned v = 0; v < n; ++v) {
        if (s & singleton(static_cast<Atom>(v))) continue;
        AtomSet t = s;
        for (Atom x : atoms_of(s)) t |= singleton(static_cast<Atom>(x ^ v));
        if (spaces.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<AtomSet> ordered(spaces.begin(), spaces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](AtomSet a, AtomSet b) {
    return cardinality(a) < cardinality(b);
  });
  std::vector<Model> out;
  for (AtomSet s : ordered) out.push_back(subspace(s));
  return out;
}

bool VectorSpaceF2::is_member(const Model& m) const {
  const AtomSet c = m.carrier();
  const AtomSet all = (AtomSet{1} << (1u << dim_)) - 1;
  if (!subset_of(c, all) || !(c & singleton(0))) return false;
  for (Atom x : atoms_of(c)) {
    for (Atom y : atoms_of(c)) {
      if (!(c & singleton(static_cast<Atom>(x ^ y)))) return false;
    }
  }
  return m == subspace(c);
}

bool VectorSpaceF2::is_sub(const Model& m, const Model& n) const {
  return is_member(m) && is_member(n) && subset_of(m.carrier(), n.carrier());
}

bool VectorSpaceF2::nf(const Model& m0, const Model& m1, const Model& m2,
                       const Model& m3) const {
  if (!is_sub(m0, m1) || !is_sub(m0, m2) || !is_member(m3)) return false;
  const AtomSet sum = span_carrier(m1.carrier(), m2.carrier());
  if (!subset_of(sum, m3.carrier())) return false;
  if ((m1.carrier() & m2.carrier()) != m0.carrier()) return false;
  return dimension(sum) == dimension(m1.carrier()) +
                               dimension(m2.carrier()) -
                               dimension(m0.carrier());
}

std::optional<Model> VectorSpaceF2::prime_over_vee(const Model&,
                                                   const Model& m1,
                                                   const Model& m2,
                                                   const Model& m3) const {
  const AtomSet sum = span_carrier(m1.carrier(), m2.carrier());
  if (!subset_of(sum, m3.carrier())) return std::nullopt;
  return subspace(sum);
}

AtomSet VectorSpaceF2::span_carrier(AtomSet a, AtomSet b) {
  AtomSet out = 0;
  for (Atom x : atoms_of(a)) {
    for (Atom y : atoms_of(b)) out |= singleton(static_cast<Atom>(x ^ y));
  }
  return out;
}

std::string VectorSpaceF2::atom_name(Atom a) const {
  if (a >= (1u << dim_)) return ClassInstance::atom_name(a);
  std::string s;
  for (int k = dim_ - 1; k >= 0; --k) s += ((a >> k) & 1) ? '1' : '0';
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// PowersetNaming

namespace {
constexpr std::uint8_t kU = 0, kV = 1, kE = 2;
}

PowersetNaming::PowersetNaming(int u_max, int variant, NfMode mode)
    : u_max_(u_max), variant_(variant), mode_(mode) {
  if (u_max < 0 || u_max > kMaxU) {
    throw InstanceError(InstanceErrc::kUniverseTooLarge,
                        "u_max " + std::to_string(u_max));
  }
  if (variant != 1 && variant != 2) {
    throw InstanceError(InstanceErrc::kConfigParse,
                        "variant must be 1 or 2");
  }
  u_mask_ = (AtomSet{1} << u_max) - 1;
  signature_ = {{"U", 1}, {"V", 1}, {"E", 2}};
}

AtomSet PowersetNaming::named_in(Atom v, const Model& m) const {
  const AtomSet x = static_cast<AtomSet>(v - u_max_);
  return x & u_atoms(m);
}

Model PowersetNaming::structure(AtomSet carrier) const {
  std::vector<Fact> facts;
  const AtomSet us = carrier & u_mask_;
  for (Atom u : atoms_of(us)) facts.push_back({kU, {u, 0, 0}});
  for (Atom v : atoms_of(carrier & ~u_mask_)) {
    facts.push_back({kV, {v, 0, 0}});
    const AtomSet x = static_cast<AtomSet>(v - u_max_);
    for (Atom u : atoms_of(x & us)) facts.push_back({kE, {u, v, 0}});
  }
  return Model(carrier, std::move(facts));
}

std::vector<Model> PowersetNaming::fragment() const {
  const unsigned subsets = 1u << u_max_;
  std::vector<AtomSet> carriers;
  for (AtomSet us = 0; us <= u_mask_; ++us) {
    // One name for each subset Y of us, chosen among the X with X & us = Y.
    std::vector<std::vector<Atom>> choices;
    for (AtomSet y = 0; y <= us; ++y) {
      if (!subset_of(y, us)) continue;
      std::vector<Atom> options;
      for (unsigned x = 0; x < subsets; ++x) {
        if ((x & us) == y) options.push_back(name_atom(x));
      }
      choices.push_back(std::move(options));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      AtomSet c = us;
      for (std::size_t k = 0; k < choices.size(); ++k) {
        c |= singleton(choices[k][pick[k]]);
      }
      carriers.push_back(c);
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  std::sort(carriers.begin(), carriers.end(), [](AtomSet a, AtomSet b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return a < b;
  });
  std::vector<Model> out;
  for (AtomSet c : carriers) out.push_back(structure(c));
  return out;
}

bool PowersetNaming::is_member(const Model& m) const {
  const AtomSet all_names = ((AtomSet{1} << (1u << u_max_)) - 1) << u_max_;
  if (!subset_of(m.carrier(), u_mask_ | all_names)) return false;
  if (!(m == structure(m.carrier()))) return false;
  std::set<AtomSet> named;
  for (Atom v : atoms_of(v_atoms(m))) {
    if (!named.insert(named_in(v, m)).second) return false;
  }
  return named.size() == (std::size_t{1} << cardinality(u_atoms(m)));
}

bool PowersetNaming::is_sub(const Model& m, const Model& n) const {
  if (!is_member(m) || !is_member(n)) return false;
  if (!subset_of(m.carrier(), n.carrier())) return false;
  if (variant_ == 2) return true;
  for (Atom v : atoms_of(v_atoms(m))) {
    if (named_in(v, n) != named_in(v, m)) return false;
  }
  return true;
}

bool PowersetNaming::nf(const Model& m0, const Model& m1, const Model& m2,
                        const Model& m3) const {
  if (!is_sub(m0, m1) || !is_sub(m1, m3) || !is_sub(m0, m2) ||
      !is_sub(m2, m3)) {
    return false;
  }
  for (const Model* side : {&m1, &m2}) {
    for (Atom v : atoms_of(v_atoms(*side))) {
      if (!subset_of(named_in(v, m3), u_atoms(*side))) return false;
    }
  }
  if (mode_ == NfMode::kFree &&
      (m1.carrier() & m2.carrier()) != m0.carrier()) {
    return false;
  }
  return true;
}

std::optional<Model> PowersetNaming::prime_over_vee(const Model&,
                                                    const Model& m1,
                                                    const Model& m2,
                                                    const Model& m3) const {
  const AtomSet us = u_atoms(m1) | u_atoms(m2);
  if (!subset_of(us, m3.carrier())) return std::nullopt;
  AtomSet c = us;
  for (Atom v : atoms_of(v_atoms(m3))) {
    if (subset_of(named_in(v, m3), us)) c |= singleton(v);
  }
  Model p = structure(c);
  if (!is_sub(p, m3) || !is_sub(m1, p) || !is_sub(m2, p)) return std::nullopt;
  return p;
}

std::string PowersetNaming::atom_name(Atom a) const {
  if (a < u_max_) return "u" + std::to_string(a);
  const unsigned x = a - u_max_;
  if (x >= (1u << u_max_)) return ClassInstance::atom_name(a);
  std::string s = "v";
  if (x == 0) return "v_";
  for (int k = 0; k < u_max_; ++k) {
    if ((x >> k) & 1) s += std::to_string(k);
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw InstanceError(InstanceErrc::kConfigParse, what);
}

int int_field(const nlohmann::json& config, const char* key) {
  if (!config.contains(key) || !config[key].is_number_integer()) {
    parse_error(std::string("missing integer field '") + key + "'");
  }
  return config[key].get<int>();
}

}  // namespace

std::shared_ptr<const ClassInstance> make_instance(
    const nlohmann::json& config) {
  if (!config.is_object() || !config.contains("kind") ||
      !config["kind"].is_string()) {
    parse_error("instance config needs a string 'kind'");
  }
  const std::string kind = config["kind"].get<std::string>();
  if (kind == "disjoint_sets") {
    if (!config.contains("universe") || !config["universe"].is_array()) {
      parse_error("disjoint_sets needs a 'universe' array");
    }
    std::vector<std::string> names;
    for (const auto& item : config["universe"]) {
      if (!item.is_string()) parse_error("universe entries must be strings");
      names.push_back(item.get<std::string>());
    }
    return std::make_shared<DisjointSets>(std::move(names));
  }
  if (kind == "vector_space_f2") {
    return std::make_shared<VectorSpaceF2>(int_field(config, "dim"));
  }
  if (kind == "powerset_naming") {
    const int variant = int_field(config, "variant");
    auto mode = variant == 1 ? PowersetNaming::NfMode::kFree
                             : PowersetNaming::NfMode::kNaive;
    if (config.contains("nf")) {
      if (!config["nf"].is_string()) parse_error("'nf' must be a string");
      const std::string nf = config["nf"].get<std::string>();
      if (nf == "naive") {
        mode = PowersetNaming::NfMode::kNaive;
      } else if (nf == "free") {
        mode = PowersetNaming::NfMode::kFree;
      } else {
        parse_error("'nf' must be \"naive\" or \"free\"");
      }
    }
    return std::make_shared<PowersetNaming>(int_field(config, "u_max"),
                                            variant, mode);
  }
  throw InstanceError(InstanceErrc::kUnknownInstance, kind);
}

}  // namespace adequate
