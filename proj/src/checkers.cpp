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

#include "adequate/checkers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "adequate/diagram.hpp"

namespace adequate {

namespace {

// A configuration handed to a probe: models, plus the atom set and lambda
// that only A4 uses.
struct Config {
  std::vector<ModelIndex> m;
  AtomSet atoms = 0;
  int lambda = 0;
};

enum class Outcome { kHolds, kViolated, kUnsettled };

struct Probe {
  Outcome outcome = Outcome::kHolds;
  std::string note;
};

Probe holds() { return {}; }
Probe violated(std::string note) { return {Outcome::kViolated, std::move(note)}; }
Probe unsettled(std::string note) {
  return {Outcome::kUnsettled, std::move(note)};
}

std::string ids(const Fragment& f, std::initializer_list<ModelIndex> ms) {
  std::string out;
  for (ModelIndex m : ms) {
    if (!out.empty()) out += ",";
    out += f.id(m);
  }
  return out;
}

std::string atom_list(const Fragment& f, AtomSet atoms) {
  std::string out;
  for (Atom a : atoms_of(atoms)) {
    if (!out.empty()) out += ",";
    out += f.instance().atom_name(a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Probes. Each one evaluates a single configuration and is shared by the
// exhaustive loops and by replay.

Probe probe_a0(const Fragment& f, const Config& c) {
  if (f.sub(c.m[0], c.m[0])) return holds();
  return violated(f.id(c.m[0]) + " is not below itself");
}

Probe probe_a1(const Fragment& f, const Config& c) {
  if (!f.sub(c.m[0], c.m[1]) || f.substructure(c.m[0], c.m[1])) return holds();
  return violated(ids(f, {c.m[0], c.m[1]}) +
                  ": K-submodel but not a substructure");
}

Probe probe_a2(const Fragment& f, const Config& c) {
  if (!f.sub(c.m[0], c.m[1]) || !f.sub(c.m[1], c.m[2]) ||
      f.sub(c.m[0], c.m[2])) {
    return holds();
  }
  return violated(ids(f, {c.m[0], c.m[1], c.m[2]}) + ": <= not transitive");
}

Probe probe_a3(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], n = c.m[2];
  if (!f.substructure(m0, m1) || !f.substructure(m1, n) || !f.sub(m0, n) ||
      !f.sub(m1, n) || f.sub(m0, m1)) {
    return holds();
  }
  return violated(ids(f, {m0, m1, n}) +
                  ": both below the top, nested, but first not below second");
}

Probe probe_a4(const Fragment& f, const Config& c) {
  const ModelIndex m = c.m[0];
  if (!subset_of(c.atoms, f.model(m).carrier()) ||
      cardinality(c.atoms) > c.lambda) {
    return holds();
  }
  for (ModelIndex n = 0; n < f.size(); ++n) {
    if (f.model(n).size() <= c.lambda &&
        subset_of(c.atoms, f.model(n).carrier()) && f.sub(n, m)) {
      return holds();
    }
  }
  std::string note = "no K-submodel of " + f.id(m) + " of size <= " +
                     std::to_string(c.lambda) + " contains {" +
                     atom_list(f, c.atoms) + "}";
  return f.complete() ? violated(note) : unsettled(note);
}

Probe probe_c1(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3];
  if (!f.nf(m0, m1, m2, m3)) return holds();
  if (f.sub(m0, m2) && f.sub(m2, m3) && f.sub(m0, m1) && f.sub(m1, m3)) {
    return holds();
  }
  return violated("nf holds without the required <= relations");
}

// Members k with M0 <= k and an isomorphism m -> k fixing M0 pointwise;
// m itself first.
std::vector<ModelIndex> copies_over(const Fragment& f, ModelIndex m0,
                                    ModelIndex m) {
  std::vector<ModelIndex> out = {m};
  const AtomMap fix = AtomMap::identity(f.model(m0).carrier());
  for (ModelIndex k = 0; k < f.size(); ++k) {
    if (k == m || !f.sub(m0, k)) continue;
    if (f.find_isomorphism(m, k, fix)) out.push_back(k);
  }
  return out;
}

Probe probe_c2(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2];
  if (!f.sub(m0, m1) || !f.sub(m0, m2)) return holds();
  const auto left = copies_over(f, m0, m1);
  const auto right = copies_over(f, m0, m2);
  for (ModelIndex a : left) {
    for (ModelIndex b : right) {
      for (ModelIndex m3 = 0; m3 < f.size(); ++m3) {
        if (f.nf(m0, a, b, m3)) {
          return {Outcome::kHolds, "amalgamated as " + ids(f, {a, b, m3})};
        }
      }
    }
  }
  return unsettled("no free completion of the vee inside the fragment");
}

Probe probe_c3i(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m2p = c.m[4];
  if (!f.nf(m0, m1, m2, m3) || !f.sub(m0, m2p) || !f.sub(m2p, m2) ||
      f.nf(m0, m1, m2p, m3)) {
    return holds();
  }
  return violated("shrinking the right side to " + f.id(m2p) +
                  " loses freeness");
}

Probe probe_c3ii(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m3p = c.m[4];
  if (!f.nf(m0, m1, m2, m3) || !f.sub(m3, m3p) || f.nf(m0, m1, m2, m3p)) {
    return holds();
  }
  return violated("not free inside the larger " + f.id(m3p));
}

Probe probe_c3iii(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m3p = c.m[4];
  const AtomSet both = f.model(m1).carrier() | f.model(m2).carrier();
  if (!f.nf(m0, m1, m2, m3) || !subset_of(both, f.model(m3p).carrier()) ||
      !f.sub(m3p, m3) || f.nf(m0, m1, m2, m3p)) {
    return holds();
  }
  return violated("not free inside the smaller " + f.id(m3p));
}

// Isomorphisms of the free amalgam (a0,a1,a2) onto (b0,b1,b2), as pairs
// of maps a1 -> b1, a2 -> b2 agreeing on a0 and sending it onto b0.
void for_each_triple_iso(
    const Fragment& f, const Quad& a, const Quad& b,
    const std::function<bool(const AtomMap&, const AtomMap&)>& visit) {
  for (int k = 0; k < 3; ++k) {
    if (f.model(a[k]).size() != f.model(b[k]).size()) return;
  }
  const AtomSet base = f.model(a[0]).carrier();
  for (const AtomMap& f1 : f.embeddings(a[1], b[1])) {
    if (f1.range() != f.model(b[1]).carrier()) continue;
    if (f1.apply(base) != f.model(b[0]).carrier()) continue;
    const AtomMap on_base = f1.restricted(base);
    for (const AtomMap& f2 : f.embeddings(a[2], b[2])) {
      if (f2.range() != f.model(b[2]).carrier()) continue;
      if (!(f2.restricted(base) == on_base)) continue;
      if (!visit(f1, f2)) return;
    }
  }
}

Probe probe_c5(const Fragment& f, const Config& c) {
  const Quad a = {c.m[0], c.m[1], c.m[2], c.m[3]};
  const Quad b = {c.m[4], c.m[5], c.m[6], c.m[7]};
  if (!f.nf(a) || !f.nf(b)) return holds();
  Probe result = holds();
  for_each_triple_iso(f, a, b, [&](const AtomMap& f1, const AtomMap& f2) {
    if (f1.compatible(f2)) {
      const AtomMap both = f1.merged(f2);
      for (ModelIndex n = 0; n < f.size(); ++n) {
        if (!f.sub(b[3], n)) continue;
        if (f.find_k_embedding(f.model(a[3]), n, both)) return true;
      }
    }
    const std::string note =
        "no N above " + f.id(b[3]) + " receives " + f.id(a[3]) +
        " along the isomorphism of the amalgams";
    result = f.complete() ? violated(note) : unsettled(note);
    return false;
  });
  return result;
}

Probe probe_c6(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3];
  if (!f.nf(m0, m1, m2, m3) || f.nf(m0, m2, m1, m3)) return holds();
  return violated("nf does not hold with the sides exchanged");
}

Probe probe_c7(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3];
  if (!f.nf(m0, m1, m2, m3)) return holds();
  auto meet = f.intersect(m1, m2);
  if (meet && *meet == m0) return holds();
  return violated(meet ? "intersection of the sides is " + f.id(*meet)
                       : std::string("intersection of the sides is not a member"));
}

Probe probe_base_monotonicity(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   n = c.m[4];
  if (!f.nf(m0, m1, m2, m3) || !f.sub(m0, n) || !f.sub(n, m1) ||
      !f.sub(n, m2) || f.nf(n, m1, m2, m3)) {
    return holds();
  }
  return violated("not free over the larger base " + f.id(n));
}

Probe probe_d1(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3];
  if (!f.nf(m0, m1, m2, m3)) return holds();
  if (auto p = f.prime_in(m0, m1, m2, m3)) {
    return {Outcome::kHolds, "prime " + f.id(*p)};
  }
  const std::string note = "no prime model over the vee inside " + f.id(m3);
  return f.complete() ? violated(note) : unsettled(note);
}

Probe probe_d2(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m4 = c.m[4], m5 = c.m[5];
  if (!f.nf(m0, m1, m4, m5) || !f.sub(m0, m2) || !f.sub(m2, m4) ||
      !f.sub(m3, m5) || !f.is_prime_over_vee(m0, m1, m2, m3)) {
    return holds();
  }
  if (f.nf(m2, m3, m4, m5)) return holds();
  return violated("prime " + f.id(m3) + " and " + f.id(m4) +
                  " are not free over " + f.id(m2));
}

Probe probe_d3(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], p = c.m[3];
  if (!f.is_prime_over_vee(m0, m1, m2, p)) return holds();
  for (ModelIndex q = 0; q < f.size(); ++q) {
    if (q != p && f.sub(q, p) && f.sub(m1, q) && f.sub(m2, q)) {
      return violated("proper K-submodel " + f.id(q) + " contains the vee");
    }
  }
  return holds();
}

Probe probe_d4(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], p = c.m[3],
                   q = c.m[4];
  if (!f.is_prime_over_vee(m0, m1, m2, p) ||
      !f.is_prime_over_vee(m0, m1, m2, q)) {
    return holds();
  }
  const AtomSet vee = f.model(m1).carrier() | f.model(m2).carrier();
  if (f.find_isomorphism(p, q, AtomMap::identity(vee))) return holds();
  return violated("primes " + ids(f, {p, q}) + " are not isomorphic over the vee");
}

Probe probe_d5(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m4 = c.m[4], m5 = c.m[5];
  if (!f.is_prime_over_vee(m0, m1, m4, m5) || !f.sub(m0, m2) ||
      !f.sub(m2, m4) || !f.sub(m3, m5) ||
      !f.is_prime_over_vee(m0, m1, m2, m3)) {
    return holds();
  }
  if (f.is_prime_over_vee(m2, m3, m4, m5)) return holds();
  return violated(f.id(m5) + " is not prime over " + ids(f, {m3, m4}));
}

Probe probe_transind(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m4 = c.m[4], m5 = c.m[5];
  if (!f.nf(m0, m1, m2, m3) || !f.nf(m2, m3, m4, m5) ||
      f.nf(m0, m1, m4, m5)) {
    return holds();
  }
  return violated(ids(f, {m1, m4}) + " are not free over " + f.id(m0) +
                  " inside " + f.id(m5));
}

Probe probe_transprime(const Fragment& f, const Config& c) {
  const ModelIndex m0 = c.m[0], m1 = c.m[1], m2 = c.m[2], m3 = c.m[3],
                   m4 = c.m[4], m5 = c.m[5];
  if (!f.nf(m0, m1, m4, m5) || !f.sub(m0, m2) || !f.sub(m2, m4) ||
      !f.sub(m3, m5) || !f.is_prime_over_vee(m0, m1, m2, m3) ||
      !f.is_prime_over_vee(m2, m3, m4, m5)) {
    return holds();
  }
  auto refuting = f.prime_refutation(m0, m1, m4, m5);
  if (!refuting) return holds();
  return violated(f.id(m5) + " is not prime over " + ids(f, {m1, m4}) +
                  "; refuted in " + f.id(*refuting));
}

Probe probe_ch1(const Fragment& f, const Config& c) {
  for (std::size_t i = 0; i + 1 < c.m.size(); ++i) {
    if (!f.sub(c.m[i], c.m[i + 1])) return holds();
  }
  const Diagram d = make_chain(f, c.m);
  const ModelIndex top = cpr_finite(f, c.m);
  const PrimalityResult r =
      is_compatibility_prime(f, d, top, identity_embedding(f, d));
  if (r.verdict == Verdict::kFail) {
    return violated("maximum is not compatibility prime; refuted in " +
                    f.id(*r.refuting));
  }
  if (r.verdict == Verdict::kInconclusive) {
    return unsettled("fragment incomplete");
  }
  return holds();
}

using ProbeFn = Probe (*)(const Fragment&, const Config&);

struct AxiomSpec {
  const char* name;
  std::size_t arity;
  ProbeFn probe;
  bool required;
};

const std::vector<AxiomSpec>& axiom_table() {
  static const std::vector<AxiomSpec> table = {
      {"A0", 1, probe_a0, true},
      {"A1", 2, probe_a1, true},
      {"A2", 3, probe_a2, true},
      {"A3", 3, probe_a3, true},
      {"A4", 1, probe_a4, true},
      {"C1", 4, probe_c1, true},
      {"C2", 3, probe_c2, true},
      {"C3i", 5, probe_c3i, true},
      {"C3ii", 5, probe_c3ii, true},
      {"C3iii", 5, probe_c3iii, true},
      {"C5", 8, probe_c5, true},
      {"C6", 4, probe_c6, true},
      {"C7", 4, probe_c7, true},
      {"base-monotonicity", 5, probe_base_monotonicity, true},
      {"D1", 4, probe_d1, true},
      {"D2", 6, probe_d2, true},
      {"D3", 4, probe_d3, false},
      {"D4", 5, probe_d4, false},
      {"D5", 6, probe_d5, false},
      {"transitivity-of-independence", 6, probe_transind, true},
      {"transitivity-of-primality", 6, probe_transprime, true},
      {"Ch1", 0, probe_ch1, true},
  };
  return table;
}

const AxiomSpec& spec_of(const std::string& name) {
  for (const auto& s : axiom_table()) {
    if (name == s.name) return s;
  }
  throw KernelError(KernelErrc::kUnknownModel, "unknown axiom " + name);
}

// Collects probe outcomes for one axiom.
class Tally {
 public:
  Tally(const Fragment& frag, const std::string& axiom)
      : frag_(frag), spec_(spec_of(axiom)) {
    entry_.axiom = axiom;
    entry_.required = spec_.required;
  }

  void run(const Config& c) {
    ++entry_.configurations;
    const Probe p = spec_.probe(frag_, c);
    if (p.outcome == Outcome::kViolated) {
      if (violations_++ == 0) {
        entry_.counterexample = encode(c);
        first_note_ = p.note;
      }
    } else if (p.outcome == Outcome::kUnsettled) {
      if (unsettled_++ == 0) {
        entry_.unresolved = encode(c);
        unsettled_note_ = p.note;
      }
    }
  }

  AxiomEntry finish(const std::string& pass_note = "") {
    if (violations_ > 0) {
      entry_.verdict = Verdict::kFail;
      entry_.note = first_note_ + " (" + std::to_string(violations_) +
                    " violating configurations)";
    } else if (unsettled_ > 0) {
      entry_.verdict = Verdict::kInconclusive;
      entry_.note = unsettled_note_ + " (" + std::to_string(unsettled_) +
                    " unsettled configurations)";
    } else {
      entry_.verdict = Verdict::kPass;
      entry_.note = pass_note.empty()
                        ? std::to_string(entry_.configurations) +
                              " configurations checked"
                        : pass_note;
    }
    return entry_;
  }

  std::size_t violations() const { return violations_; }
  std::size_t unsettled() const { return unsettled_; }

 private:
  std::vector<std::string> encode(const Config& c) const {
    std::vector<std::string> out;
    for (ModelIndex m : c.m) out.push_back(frag_.id(m));
    if (spec_.probe == probe_a4) {
      out.push_back("atoms:" + atom_list(frag_, c.atoms));
      out.push_back("lambda:" + std::to_string(c.lambda));
    }
    return out;
  }

  const Fragment& frag_;
  const AxiomSpec& spec_;
  AxiomEntry entry_;
  std::size_t violations_ = 0;
  std::size_t unsettled_ = 0;
  std::string first_note_;
  std::string unsettled_note_;
};

Config cfg(std::initializer_list<ModelIndex> ms) {
  Config c;
  c.m = ms;
  return c;
}

// Runs A4 at a fixed lambda.
AxiomEntry lsp_entry(const Fragment& f, int lambda) {
  Tally t(f, "A4");
  for (ModelIndex m = 0; m < f.size(); ++m) {
    const AtomSet carrier = f.model(m).carrier();
    // Enumerate subsets of the carrier.
    for (AtomSet a = carrier;; a = (a - 1) & carrier) {
      if (cardinality(a) <= lambda) {
        Config c = cfg({m});
        c.atoms = a;
        c.lambda = lambda;
        t.run(c);
      }
      if (a == 0) break;
    }
  }
  return t.finish();
}

}  // namespace

AxiomReport check_axioms_A(const Fragment& f, std::optional<int> lambda) {
  AxiomReport r;
  const std::size_t n = f.size();
  {
    Tally t(f, "A0");
    for (ModelIndex m = 0; m < n; ++m) t.run(cfg({m}));
    r.entries.push_back(t.finish());
  }
  {
    Tally t(f, "A1");
    for (ModelIndex a = 0; a < n; ++a)
      for (ModelIndex b = 0; b < n; ++b) t.run(cfg({a, b}));
    r.entries.push_back(t.finish());
  }
  {
    Tally t(f, "A2");
    for (ModelIndex a = 0; a < n; ++a)
      for (ModelIndex b = 0; b < n; ++b) {
        if (!f.sub(a, b)) continue;
        for (ModelIndex c = 0; c < n; ++c) {
          if (f.sub(b, c)) t.run(cfg({a, b, c}));
        }
      }
    r.entries.push_back(t.finish());
  }
  {
    Tally t(f, "A3");
    for (ModelIndex a = 0; a < n; ++a)
      for (ModelIndex b = 0; b < n; ++b) {
        if (!f.substructure(a, b)) continue;
        for (ModelIndex c = 0; c < n; ++c) t.run(cfg({a, b, c}));
      }
    r.entries.push_back(t.finish());
  }
  if (lambda) {
    AxiomEntry e = lsp_entry(f, *lambda);
    e.witness = {"lambda=" + std::to_string(*lambda)};
    r.entries.push_back(e);
  } else {
    // The least lambda with the bounded property; it exists once lambda
    // reaches the largest carrier.
    int largest = 0;
    for (ModelIndex m = 0; m < n; ++m) {
      largest = std::max(largest, f.model(m).size());
    }
    AxiomEntry found;
    for (int l = 0; l <= largest; ++l) {
      found = lsp_entry(f, l);
      if (found.verdict == Verdict::kPass) {
        found.witness = {"lambda=" + std::to_string(l)};
        found.note = "least lambda with the bounded property is " +
                     std::to_string(l);
        break;
      }
    }
    r.entries.push_back(found);
  }
  return r;
}

AxiomReport check_axioms_C(const Fragment& f) {
  AxiomReport r;
  const std::size_t n = f.size();
  const auto& amalgams = f.amalgams();
  {
    Tally t(f, "C1");
    for (ModelIndex a = 0; a < n; ++a)
      for (ModelIndex b = 0; b < n; ++b)
        for (ModelIndex c = 0; c < n; ++c)
          for (ModelIndex d = 0; d < n; ++d) t.run(cfg({a, b, c, d}));
    r.entries.push_back(t.finish());
  }
  {
    Tally t(f, "C2");
    for (ModelIndex a = 0; a < n; ++a)
      for (ModelIndex b = 0; b < n; ++b) {
        if (!f.sub(a, b)) continue;
        for (ModelIndex c = 0; c < n; ++c) {
          if (f.sub(a, c)) t.run(cfg({a, b, c}));
        }
      }
    r.entries.push_back(t.finish());
  }
  {
    Tally ti(f, "C3i"), tii(f, "C3ii"), tiii(f, "C3iii");
    for (const Quad& q : amalgams) {
      for (ModelIndex k = 0; k < n; ++k) {
        Config c = cfg({q[0], q[1], q[2], q[3], k});
        if (f.sub(q[0], k) && f.sub(k, q[2])) ti.run(c);
        if (f.sub(q[3], k)) tii.run(c);
        if (f.sub(k, q[3])) tiii.run(c);
      }
    }
    r.entries.push_back(ti.finish());
    r.entries.push_back(tii.finish());
    r.entries.push_back(tiii.finish());
  }
  {
    Tally t(f, "C5");
    for (const Quad& a : amalgams) {
      for (const Quad& b : amalgams) {
        bool same_shape = true;
        for (int k = 0; k < 3; ++k) {
          same_shape = same_shape &&
                       f.model(a[k]).size() == f.model(b[k]).size();
        }
        if (!same_shape) continue;
        t.run(cfg({a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]}));
      }
    }
    r.entries.push_back(t.finish());
  }
  {
    Tally t6(f, "C6"), t7(f, "C7");
    for (const Quad& q : amalgams) {
      t6.run(cfg({q[0], q[1], q[2], q[3]}));
      t7.run(cfg({q[0], q[1], q[2], q[3]}));
    }
    r.entries.push_back(t6.finish());
    r.entries.push_back(t7.finish());
  }
  return r;
}

AxiomReport check_prop_base_monotonicity(const Fragment& f) {
  AxiomReport r;
  Tally t(f, "base-monotonicity");
  for (const Quad& q : f.amalgams()) {
    for (ModelIndex k = 0; k < f.size(); ++k) {
      if (f.sub(q[0], k) && f.sub(k, q[1]) && f.sub(k, q[2])) {
        t.run(cfg({q[0], q[1], q[2], q[3], k}));
      }
    }
  }
  r.entries.push_back(t.finish());
  return r;
}

namespace {

// Visits (m0, m1, m2, m3, m4, m5) with nf(m0, m1, m4, m5), m0 <= m2 <= m4,
// m3 <= m5 and m3 prime over (m0, m1, m2).
void for_each_base_extension(
    const Fragment& f,
    const std::function<void(ModelIndex, ModelIndex, ModelIndex, ModelIndex,
                             ModelIndex, ModelIndex)>& visit) {
  const std::size_t n = f.size();
  for (const Quad& q : f.amalgams()) {
    const ModelIndex m0 = q[0], m1 = q[1], m4 = q[2], m5 = q[3];
    for (ModelIndex m2 = 0; m2 < n; ++m2) {
      if (!f.sub(m0, m2) || !f.sub(m2, m4)) continue;
      for (ModelIndex m3 = 0; m3 < n; ++m3) {
        if (!f.sub(m3, m5) || !f.nf(m0, m1, m2, m3)) continue;
        if (!f.is_prime_over_vee(m0, m1, m2, m3)) continue;
        visit(m0, m1, m2, m3, m4, m5);
      }
    }
  }
}

}  // namespace

AxiomReport check_axioms_D(const Fragment& f) {
  AxiomReport r;
  const auto& amalgams = f.amalgams();
  {
    Tally t(f, "D1");
    for (const Quad& q : amalgams) t.run(cfg({q[0], q[1], q[2], q[3]}));
    r.entries.push_back(t.finish());
  }
  {
    Tally t2(f, "D2"), t5(f, "D5");
    for_each_base_extension(f, [&](ModelIndex m0, ModelIndex m1,
                                   ModelIndex m2, ModelIndex m3,
                                   ModelIndex m4, ModelIndex m5) {
      t2.run(cfg({m0, m1, m2, m3, m4, m5}));
      if (f.is_prime_over_vee(m0, m1, m4, m5)) {
        t5.run(cfg({m0, m1, m2, m3, m4, m5}));
      }
    });
    AxiomEntry d2 = t2.finish();
    AxiomEntry d5 = t5.finish();
    // D3 and D4 range over the primes of each free vee.
    std::map<std::array<ModelIndex, 3>, std::vector<ModelIndex>> primes;
    for (const Quad& q : amalgams) {
      if (f.is_prime_over_vee(q[0], q[1], q[2], q[3])) {
        primes[{q[0], q[1], q[2]}].push_back(q[3]);
      }
    }
    Tally t3(f, "D3"), t4(f, "D4");
    for (const auto& [vee, ps] : primes) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        t3.run(cfg({vee[0], vee[1], vee[2], ps[i]}));
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          t4.run(cfg({vee[0], vee[1], vee[2], ps[i], ps[j]}));
        }
      }
    }
    r.entries.push_back(d2);
    r.entries.push_back(t3.finish());
    r.entries.push_back(t4.finish());
    r.entries.push_back(d5);
  }
  return r;
}

AxiomReport check_theorem_transind(const Fragment& f) {
  AxiomReport r;
  std::map<std::pair<ModelIndex, ModelIndex>, std::vector<const Quad*>> by_base;
  for (const Quad& q : f.amalgams()) by_base[{q[0], q[1]}].push_back(&q);
  Tally t(f, "transitivity-of-independence");
  for (const Quad& a : f.amalgams()) {
    auto it = by_base.find({a[2], a[3]});
    if (it == by_base.end()) continue;
    for (const Quad* b : it->second) {
      t.run(cfg({a[0], a[1], a[2], a[3], (*b)[2], (*b)[3]}));
    }
  }
  r.entries.push_back(t.finish());
  return r;
}

AxiomReport check_theorem_transprime(const Fragment& f) {
  AxiomReport r;
  Tally t(f, "transitivity-of-primality");
  for_each_base_extension(f, [&](ModelIndex m0, ModelIndex m1, ModelIndex m2,
                                 ModelIndex m3, ModelIndex m4, ModelIndex m5) {
    if (f.is_prime_over_vee(m2, m3, m4, m5)) {
      t.run(cfg({m0, m1, m2, m3, m4, m5}));
    }
  });
  r.entries.push_back(t.finish());
  return r;
}

AxiomReport check_axioms_Ch(const Fragment& f) {
  AxiomReport r;
  const std::size_t n = f.size();
  Tally t(f, "Ch1");
  for (ModelIndex a = 0; a < n; ++a) {
    t.run(cfg({a}));
    for (ModelIndex b = 0; b < n; ++b) {
      if (b == a || !f.sub(a, b)) continue;
      t.run(cfg({a, b}));
      for (ModelIndex c = 0; c < n; ++c) {
        if (c == b || c == a || !f.sub(b, c)) continue;
        t.run(cfg({a, b, c}));
      }
    }
  }
  AxiomEntry ch1 = t.finish();
  r.entries.push_back(ch1);
  AxiomEntry ch2;
  ch2.axiom = "Ch2";
  ch2.configurations = ch1.configurations;
  ch2.verdict = Verdict::kPass;
  ch2.note = "every finite chain has its maximum as canonically prime model";
  r.entries.push_back(ch2);
  AxiomEntry ch3;
  ch3.axiom = "Ch3";
  ch3.required = false;
  ch3.configurations = ch1.configurations;
  ch3.verdict = Verdict::kPass;
  ch3.note = "the maximum is determined by the chain";
  r.entries.push_back(ch3);
  return r;
}

const std::vector<std::string>& default_groups() {
  static const std::vector<std::string> groups = {"A", "C", "P", "D", "T"};
  return groups;
}

AxiomReport run_groups(const Fragment& f,
                       const std::vector<std::string>& groups,
                       std::optional<int> lambda) {
  AxiomReport r;
  r.instance = nlohmann::json::object();
  for (const std::string& g : groups) {
    if (g == "A") {
      r.append(check_axioms_A(f, lambda));
    } else if (g == "C") {
      r.append(check_axioms_C(f));
    } else if (g == "P") {
      r.append(check_prop_base_monotonicity(f));
    } else if (g == "D") {
      r.append(check_axioms_D(f));
    } else if (g == "T") {
      r.append(check_theorem_transind(f));
      r.append(check_theorem_transprime(f));
    } else if (g == "Ch") {
      r.append(check_axioms_Ch(f));
    } else {
      throw std::invalid_argument("unknown axiom group " + g);
    }
  }
  return r;
}

Verdict replay_entry(const Fragment& f, const AxiomEntry& entry) {
  const AxiomSpec& spec = spec_of(entry.axiom);
  const auto& items =
      entry.counterexample.empty() ? entry.unresolved : entry.counterexample;
  if (items.empty()) return Verdict::kPass;
  Config c;
  for (const std::string& item : items) {
    if (item.rfind("atoms:", 0) == 0) {
      std::stringstream ss(item.substr(6));
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        auto a = f.instance().atom_by_name(name);
        if (!a) throw KernelError(KernelErrc::kUnknownModel, "atom " + name);
        c.atoms |= singleton(*a);
      }
    } else if (item.rfind("lambda:", 0) == 0) {
      c.lambda = std::stoi(item.substr(7));
    } else {
      c.m.push_back(f.require_id(item));
    }
  }
  if (spec.arity != 0 && c.m.size() != spec.arity) {
    throw KernelError(KernelErrc::kUnknownModel,
                      entry.axiom + " expects " + std::to_string(spec.arity) +
                          " models");
  }
  const Probe p = spec.probe(f, c);
  switch (p.outcome) {
    case Outcome::kHolds: return Verdict::kPass;
    case Outcome::kViolated: return Verdict::kFail;
    case Outcome::kUnsettled: return Verdict::kInconclusive;
  }
  return Verdict::kInconclusive;
}

}  // namespace adequate
