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

#include "adequate/report.hpp"

#include <stdexcept>

namespace adequate {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "PASS") return Verdict::kPass;
  if (s == "FAIL") return Verdict::kFail;
  if (s == "INCONCLUSIVE") return Verdict::kInconclusive;
  throw std::invalid_argument("unknown verdict " + s);
}

bool AxiomReport::has_fail() const {
  for (const auto& e : entries) {
    if (e.required && e.verdict == Verdict::kFail) return true;
  }
  return false;
}

std::size_t AxiomReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.verdict == v;
  return n;
}

const AxiomEntry* AxiomReport::find(const std::string& axiom) const {
  for (const auto& e : entries) {
    if (e.axiom == axiom) return &e;
  }
  return nullptr;
}

void AxiomReport::append(const AxiomReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

nlohmann::json to_json(const AxiomEntry& e) {
  nlohmann::json j;
  j["axiom"] = e.axiom;
  j["verdict"] = to_string(e.verdict);
  if (!e.counterexample.empty()) j["counterexample"] = e.counterexample;
  if (!e.unresolved.empty()) j["unresolved"] = e.unresolved;
  if (!e.witness.empty()) j["witness"] = e.witness;
  j["note"] = e.note;
  j["configurations"] = e.configurations;
  j["required"] = e.required;
  return j;
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json j;
  j["instance"] = report.instance;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) j["entries"].push_back(to_json(e));
  j["fail"] = report.has_fail();
  return j;
}

AxiomEntry entry_from_json(const nlohmann::json& j) {
  AxiomEntry e;
  e.axiom = j.at("axiom").get<std::string>();
  e.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.contains("counterexample")) {
    e.counterexample = j["counterexample"].get<std::vector<std::string>>();
  }
  if (j.contains("unresolved")) {
    e.unresolved = j["unresolved"].get<std::vector<std::string>>();
  }
  if (j.contains("witness")) {
    e.witness = j["witness"].get<std::vector<std::string>>();
  }
  e.note = j.value("note", "");
  e.configurations = j.value("configurations", std::size_t{0});
  e.required = j.value("required", true);
  return e;
}

AxiomReport report_from_json(const nlohmann::json& j) {
  AxiomReport r;
  r.instance = j.at("instance");
  for (const auto& e : j.at("entries")) r.entries.push_back(entry_from_json(e));
  return r;
}

}  // namespace adequate
