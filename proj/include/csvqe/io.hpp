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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "csvqe/contextual_subspace.hpp"
#include "csvqe/contextuality.hpp"
#include "csvqe/heuristics.hpp"
#include "csvqe/quasi_model.hpp"
#include "csvqe/rotations.hpp"
#include "json.hpp"

namespace csvqe {

using Json = nlohmann::ordered_json;

/// {"n": int, "terms": {"XZI": 0.5, ...}, "constant": real, "metadata": any}.
/// An all-identity key is folded into the constant.
struct HamiltonianFile {
  Hamiltonian hamiltonian;
  Json metadata;
};

/// Throws ParseError naming the offending key or field.
HamiltonianFile parse_hamiltonian(std::string_view text);
HamiltonianFile load_hamiltonian(const std::string& path);
Json to_json(const HamiltonianFile& f);

Json to_json(const Hamiltonian& h);
Json to_json(const NoncontextualDecomposition& d);
Json to_json(const QuasiModel& m);
Json to_json(const NoncontextualState& s);
Json to_json(const RotationPlan& plan);
Json to_json(const CSVQEProblem& p);
Json to_json(const SweepRecord& r);
Json to_json(const SweepResult& r);

/// Columns: qubits,energy,error,terms,corrected.
void write_sweep_csv(std::ostream& out, const SweepResult& r);

}  // namespace csvqe
