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

// Bounded axiom checkers over an indexed fragment. Universal axioms are
// checked exhaustively; existence axioms report PASS, INCONCLUSIVE, or FAIL
// only when the fragment is complete. Every FAIL names a configuration that
// replay_entry re-evaluates on its own.

#ifndef ADEQUATE_CHECKERS_HPP_
#define ADEQUATE_CHECKERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "adequate/fragment.hpp"
#include "adequate/report.hpp"

namespace adequate {

// Group A. With lambda set, A4 is the bounded lambda-LSP; without it, A4
// asks for some finite lambda with that property and reports the least.
AxiomReport check_axioms_A(const Fragment& frag,
                           std::optional<int> lambda = std::nullopt);
AxiomReport check_axioms_C(const Fragment& frag);
AxiomReport check_prop_base_monotonicity(const Fragment& frag);
// D1, D2 required; D3, D4, D5 informational.
AxiomReport check_axioms_D(const Fragment& frag);
AxiomReport check_theorem_transind(const Fragment& frag);
AxiomReport check_theorem_transprime(const Fragment& frag);
// Finite chains of length at most 3.
AxiomReport check_axioms_Ch(const Fragment& frag);

// Groups: "A", "C", "P" (base monotonicity), "D", "T" (the two derived
// theorems), "Ch".
AxiomReport run_groups(const Fragment& frag,
                       const std::vector<std::string>& groups,
                       std::optional<int> lambda = std::nullopt);
const std::vector<std::string>& default_groups();

// Re-evaluates the entry's counterexample (or unresolved configuration):
// FAIL if it still violates the axiom, PASS otherwise, INCONCLUSIVE when a
// bounded search cannot settle it. Throws KernelError on malformed input.
Verdict replay_entry(const Fragment& frag, const AxiomEntry& entry);

}  // namespace adequate

#endif  // ADEQUATE_CHECKERS_HPP_
