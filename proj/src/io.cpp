// Copyright 2026 The CS-VQE Authors
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

#include "csvqe/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "csvqe/errors.hpp"

namespace csvqe {

namespace {

Json string_list(const std::vector<PauliOperator>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

Json index_list(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

HamiltonianFile parse_hamiltonian(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  if (!doc.contains("n")) throw ParseError("missing field 'n'");
  const auto& n_field = doc["n"];
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1 ||
      n_field.get<long long>() > static_cast<long long>(kMaxQubits)) {
    throw ParseError("field 'n' must be an integer in [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
  const auto n = n_field.get<std::size_t>();
  if (!doc.contains("terms") || !doc["terms"].is_object()) {
    throw ParseError("field 'terms' must be an object of Pauli string -> coefficient");
  }

  HamiltonianFile f;
  f.hamiltonian = Hamiltonian(n);
  if (doc.contains("constant")) {
    const auto& c = doc["constant"];
    if (!c.is_number() || !std::isfinite(c.get<double>())) {
      throw ParseError("field 'constant' must be a finite number");
    }
    f.hamiltonian.add_constant(c.get<double>());
  }
  for (const auto& [key, value] : doc["terms"].items()) {
    if (key.size() != n) {
      throw ParseError("term '" + key + "' has length " + std::to_string(key.size()) +
                       ", expected " + std::to_string(n));
    }
    if (key.find_first_not_of("IXYZ") != std::string::npos) {
      throw ParseError("term '" + key + "' contains a letter outside I, X, Y, Z");
    }
    if (!value.is_number() || !std::isfinite(value.get<double>())) {
      throw ParseError("coefficient of term '" + key + "' must be a finite number");
    }
    f.hamiltonian.add_term(PauliOperator::from_string(key), value.get<double>());
  }
  if (doc.contains("metadata")) f.metadata = doc["metadata"];
  return f;
}

HamiltonianFile load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hamiltonian(buf.str());
}

Json to_json(const Hamiltonian& h) {
  Json terms = Json::object();
  for (const auto& [p, c] : h.terms()) terms[p.str()] = c;
  return Json{{"n", h.num_qubits()}, {"terms", terms}, {"constant", h.constant()}};
}

Json to_json(const HamiltonianFile& f) {
  Json out = to_json(f.hamiltonian);
  if (!f.metadata.is_null()) out["metadata"] = f.metadata;
  return out;
}

Json to_json(const NoncontextualDecomposition& d) {
  Json cliques = Json::array();
  for (const auto& c : d.cliques) cliques.push_back(string_list(c));
  return Json{{"noncontextual", string_list(d.noncontextual_terms())},
              {"contextual", string_list(d.contextual_terms)},
              {"z_set", string_list(d.z_set)},
              {"cliques", cliques}};
}

Json to_json(const QuasiModel& m) {
  return Json{{"generators", string_list(m.generators)},
              {"clique_representatives", string_list(m.clique_reps)}};
}

Json to_json(const NoncontextualState& s) {
  Json q = Json::array();
  for (int v : s.q) q.push_back(v);
  Json r = Json::array();
  for (double v : s.r) r.push_back(v);
  return Json{{"q", q}, {"r", r}};
}

Json to_json(const RotationPlan& plan) {
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    Json step{{"generator", s.generator.signed_str()},
              {"kind", s.is_clifford() ? "quarter-turn" : "continuous"}};
    if (!s.is_clifford()) step["angle"] = s.angle;
    steps.push_back(step);
  }
  Json targets = Json::array();
  for (const auto& t : plan.targets) {
    targets.push_back(Json{{"source", t.source.signed_str()},
                           {"image", t.image.signed_str()},
                           {"qubit", t.qubit}});
  }
  return Json{{"steps", steps}, {"targets", targets}};
}

Json to_json(const CSVQEProblem& p) {
  Json assignments = Json::object();
  for (const auto& [q, v] : p.generator_assignments) assignments[std::to_string(q)] = v;
  Json out{{"retained", index_list(p.retained)},
           {"plan", to_json(p.plan)},
           {"assignments", assignments},
           {"free_qubits", index_list(p.free_qubits)},
           {"restricted_hamiltonian", to_json(p.restricted_h)},
           {"restricted_contextual_terms", p.restricted_contextual.size()},
           {"nc_energy", p.nc_energy}};
  out["a_restricted"] = p.a_restricted ? to_json(*p.a_restricted) : Json();
  return out;
}

Json to_json(const SweepRecord& r) {
  Json out{{"quantum_qubits", r.quantum_qubits},
           {"retained", index_list(r.retained)},
           {"energy", r.energy}};
  out["error"] = r.error_vs_exact ? Json(*r.error_vs_exact) : Json();
  out["terms"] = r.restricted_term_count;
  out["corrected"] = r.corrected;
  return out;
}

Json to_json(const SweepResult& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  Json out{{"heuristic", to_string(r.heuristic)}, {"nc_energy", r.nc_energy}};
  out["exact_energy"] = r.exact_energy ? Json(*r.exact_energy) : Json();
  out["truncated"] = r.truncated;
  if (r.truncated) out["truncation_reason"] = r.truncation_reason;
  out["records"] = records;
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
  out << "qubits,energy,error,terms,corrected\n";
  for (const auto& rec : r.records) {
    out << rec.quantum_qubits << ',' << format_double(rec.energy) << ','
        << (rec.error_vs_exact ? format_double(*rec.error_vs_exact) : "") << ','
        << rec.restricted_term_count << ',' << (rec.corrected ? 1 : 0) << '\n';
  }
}

}  // namespace csvqe
