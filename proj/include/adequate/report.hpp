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

#ifndef ADEQUATE_REPORT_HPP_
#define ADEQUATE_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace adequate {

enum class Verdict { kPass, kFail, kInconclusive };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct AxiomEntry {
  std::string axiom;
  Verdict verdict = Verdict::kPass;
  // Model ids (and, for A4, an "atoms:x,y" item) of the violating
  // configuration. Set only on FAIL.
  std::vector<std::string> counterexample;
  // First configuration the bounded search could not settle (INCONCLUSIVE).
  std::vector<std::string> unresolved;
  // Free-form positive evidence, e.g. "lambda=2".
  std::vector<std::string> witness;
  std::string note;
  std::size_t configurations = 0;
  // Informational entries never make a report fail.
  bool required = true;
};

struct AxiomReport {
  nlohmann::json instance;  // the config the instance was built from
  std::vector<AxiomEntry> entries;

  bool has_fail() const;
  std::size_t count(Verdict v) const;
  const AxiomEntry* find(const std::string& axiom) const;
  void append(const AxiomReport& other);
};

nlohmann::json to_json(const AxiomEntry& entry);
nlohmann::json to_json(const AxiomReport& report);
AxiomEntry entry_from_json(const nlohmann::json& j);
AxiomReport report_from_json(const nlohmann::json& j);

}  // namespace adequate

#endif  // ADEQUATE_REPORT_HPP_
