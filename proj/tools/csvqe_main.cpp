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

// Command-line front end: decompose, ground, solve, sweep, random-bench.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csvqe/bench.hpp"
#include "csvqe/errors.hpp"
#include "csvqe/heuristics.hpp"
#include "csvqe/io.hpp"
#include "csvqe/oracle.hpp"

namespace {

using csvqe::Json;

enum ExitCode { kOk = 0, kParse = 2, kResource = 3, kInvariant = 4 };

constexpr double kChemicalAccuracy = 1.594e-3;

struct Options {
  std::string file;
  bool json = false;
  bool timing = false;
  std::string csv;
  std::uint64_t seed = 0;
  std::size_t dense_limit = csvqe::kDefaultDenseLimit;
  std::string heuristic = "greedy-pair";
  std::string weight_metric = "coefficient";
  std::optional<std::size_t> qubits;
  std::vector<std::size_t> retain;
  bool retain_given = false;
  double threshold = kChemicalAccuracy;
  bool no_correction = false;
  std::size_t count = 10000;
  std::size_t bins = 50;
  std::size_t threads = 0;
};

csvqe::ContextConfig context_config(const Options& o) {
  csvqe::ContextConfig cfg;
  cfg.ground.seed = o.seed;
  cfg.solver.eigen.dense_limit = o.dense_limit;
  return cfg;
}

csvqe::WeightMetric parse_metric(const std::string& s) {
  if (s == "coefficient") return csvqe::WeightMetric::kCoefficientSum;
  if (s == "count") return csvqe::WeightMetric::kTermCount;
  throw csvqe::ParseError("unknown weight metric '" + s + "' (coefficient or count)");
}

std::optional<double> exact_or_nothing(const csvqe::Hamiltonian& h, const Options& o) {
  csvqe::OracleConfig oc;
  oc.dense_limit = o.dense_limit;
  try {
    return csvqe::exact_ground_energy(h, oc);
  } catch (const csvqe::ResourceError&) {
    return std::nullopt;
  }
}

Json maybe(const std::optional<double>& v) { return v ? Json(*v) : Json(); }

Json cmd_decompose(const Options& o) {
  const auto file = csvqe::load_hamiltonian(o.file);
  const auto d = csvqe::greedy_noncontextual_subset(file.hamiltonian);
  const auto model = csvqe::build_model(d);
  Json out = csvqe::to_json(d);
  out["model"] = csvqe::to_json(model);
  if (!o.json) {
    auto join = [](const std::vector<csvqe::PauliOperator>& ps) {
      std::string s;
      for (const auto& p : ps) s += (s.empty() ? "" : " ") + p.str();
      return s.empty() ? std::string("(none)") : s;
    };
    std::cout << "noncontextual: " << join(d.noncontextual_terms()) << "\n"
              << "contextual:    " << join(d.contextual_terms) << "\n"
              << "Z set:         " << join(d.z_set) << "\n";
    for (std::size_t i = 0; i < d.cliques.size(); ++i) {
      std::cout << "clique " << i << ":      " << join(d.cliques[i]) << "\n";
    }
    std::cout << "generators:    " << join(model.generators) << "\n"
              << "A_i:           " << join(model.clique_reps) << "\n";
  }
  return out;
}

Json cmd_ground(const Options& o) {
  const auto file = csvqe::load_hamiltonian(o.file);
  const auto ctx = csvqe::CsvqeContext::create(file.hamiltonian, context_config(o));
  const auto exact = exact_or_nothing(file.hamiltonian, o);
  Json out{{"nc_energy", ctx.ground.energy},
           {"exhaustive", ctx.ground.exhaustive},
           {"state", csvqe::to_json(ctx.ground.state)},
           {"model", csvqe::to_json(ctx.model)}};
  out["exact_energy"] = maybe(exact);
  if (!o.json) {
    std::cout << "noncontextual energy: " << std::setprecision(12) << ctx.ground.energy
              << (ctx.ground.exhaustive ? " (exhaustive)" : " (annealed)") << "\n";
    if (exact) std::cout << "exact energy:         " << *exact << "\n";
    std::cout << "state:                " << csvqe::to_json(ctx.ground.state).dump() << "\n";
  }
  return out;
}

Json cmd_solve(const Options& o) {
  const auto file = csvqe::load_hamiltonian(o.file);
  const auto& h = file.hamiltonian;
  const auto ctx = csvqe::CsvqeContext::create(h, context_config(o));
  const auto exact = exact_or_nothing(h, o);
  const auto heuristic = csvqe::parse_heuristic(o.heuristic);

  Json out{{"nc_energy", ctx.ground.energy}};
  out["exact_energy"] = maybe(exact);
  if (o.no_correction) {
    out["energy"] = ctx.ground.energy;
    out["quantum_qubits"] = 0;
    if (!o.json) {
      std::cout << "noncontextual energy: " << std::setprecision(12)
                << ctx.ground.energy << "\n";
    }
    return out;
  }
  std::vector<std::size_t> retained;
  if (o.retain_given) {
    retained = o.retain;
  } else {
    const std::size_t k =
        o.qubits.value_or(h.num_qubits() - ctx.num_generators());
    retained = csvqe::retained_for_qubits(ctx, heuristic, k, parse_metric(o.weight_metric));
  }
  const auto problem = ctx.problem(retained);
  const double energy = csvqe::solve(problem, ctx.solver);
  out["heuristic"] = o.retain_given ? "explicit" : csvqe::to_string(heuristic);
  out["quantum_qubits"] = problem.num_free_qubits();
  out["retained"] = problem.retained;
  out["energy"] = energy;
  out["error"] = exact ? Json(energy - *exact) : Json();
  out["restricted_terms"] = problem.restricted_contextual.size();
  out["full_terms"] = h.size();
  if (!o.json) {
    std::cout << std::setprecision(12) << "noncontextual energy: " << ctx.ground.energy
              << "\nCS-VQE energy:        " << energy << " on "
              << problem.num_free_qubits() << " qubits\n";
    if (exact) std::cout << "exact energy:         " << *exact << "\n";
    std::cout << "restricted terms:     " << problem.restricted_contextual.size()
              << " of " << h.size() << "\n";
  }
  return out;
}

Json cmd_sweep(const Options& o) {
  const auto file = csvqe::load_hamiltonian(o.file);
  const auto ctx = csvqe::CsvqeContext::create(file.hamiltonian, context_config(o));
  csvqe::SweepConfig sc;
  sc.weight_metric = parse_metric(o.weight_metric);
  const auto result = csvqe::sweep(ctx, csvqe::parse_heuristic(o.heuristic), sc);

  std::optional<std::size_t> first_within;
  for (const auto& r : result.records) {
    if (r.error_vs_exact && std::abs(*r.error_vs_exact) <= o.threshold) {
      first_within = r.quantum_qubits;
      break;
    }
  }
  Json out = csvqe::to_json(result);
  out["threshold"] = o.threshold;
  out["first_within_threshold"] = first_within ? Json(*first_within) : Json();
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw csvqe::ParseError("cannot write '" + o.csv + "'");
    csvqe::write_sweep_csv(csv, result);
  }
  if (!o.json) {
    std::cout << "heuristic " << csvqe::to_string(result.heuristic) << "\n";
    csvqe::write_sweep_csv(std::cout, result);
    if (first_within) {
      std::cout << "first size within " << o.threshold << ": " << *first_within
                << " qubits\n";
    }
    if (result.truncated) std::cout << "truncated: " << result.truncation_reason << "\n";
  }
  return out;
}

Json cmd_random_bench(const Options& o) {
  csvqe::BenchConfig bc;
  bc.count = o.count;
  bc.seed = o.seed;
  bc.bins = o.bins;
  bc.threads = o.threads;
  const auto r = csvqe::random_bench(bc);
  const auto& hist = r.histogram;
  Json bins = Json::array();
  for (std::size_t b = 0; b + 1 < hist.edges.size(); ++b) {
    bins.push_back(Json{{"lo", hist.edges[b]},
                        {"hi", hist.edges[b + 1]},
                        {"nc", hist.nc_counts[b]},
                        {"corrected", hist.corrected_counts[b]}});
  }
  Json out{{"count", o.count},
           {"excluded", r.excluded},
           {"mean_nc_error", r.mean_nc_error},
           {"mean_corrected_error", r.mean_corrected_error},
           {"ordering_violations", r.ordering_violations},
           {"histogram", bins}};
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw csvqe::ParseError("cannot write '" + o.csv + "'");
    csv << std::setprecision(17) << "lo,hi,nc,corrected\n";
    for (std::size_t b = 0; b + 1 < hist.edges.size(); ++b) {
      csv << hist.edges[b] << ',' << hist.edges[b + 1] << ',' << hist.nc_counts[b]
          << ',' << hist.corrected_counts[b] << '\n';
    }
  }
  if (!o.json) {
    std::cout << std::setprecision(6) << "instances:            " << o.count
              << " (excluded " << r.excluded << ")\n"
              << "mean error, nc only:  " << r.mean_nc_error << "\n"
              << "mean error, corrected: " << r.mean_corrected_error << "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contextual-subspace VQE, classically simulated"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "Hamiltonian JSON file")->required();
    sub->add_flag("--json", o.json, "Print a JSON report");
    sub->add_flag("--timing", o.timing, "Include wall time in the JSON report");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--dense-limit", o.dense_limit, "Largest register diagonalized");
  };
  auto* decompose = app.add_subcommand("decompose", "Split terms into noncontextual and contextual parts");
  common(decompose, true);
  auto* ground = app.add_subcommand("ground", "Noncontextual ground state");
  common(ground, true);
  auto* solve = app.add_subcommand("solve", "CS-VQE energy for one register size");
  common(solve, true);
  auto* qubits = solve->add_option("--qubits", o.qubits, "Quantum register size");
  solve->add_option("--retain", o.retain, "Explicit retained generator indices")
      ->excludes(qubits);
  solve->add_option("--heuristic", o.heuristic, "greedy-pair, optimal or weight");
  solve->add_option("--weight-metric", o.weight_metric, "coefficient or count");
  solve->add_flag("--no-correction", o.no_correction, "Report the noncontextual energy only");
  auto* sweep = app.add_subcommand("sweep", "Energy against register size");
  common(sweep, true);
  sweep->add_option("--heuristic", o.heuristic, "greedy-pair, optimal or weight");
  sweep->add_option("--weight-metric", o.weight_metric, "coefficient or count");
  sweep->add_option("--threshold", o.threshold, "Accuracy marker");
  sweep->add_option("--csv", o.csv, "Write records as CSV");
  auto* bench = app.add_subcommand("random-bench", "Ensemble of random three-qubit examples");
  common(bench, false);
  bench->add_option("--count", o.count, "Number of instances");
  bench->add_option("--bins", o.bins, "Histogram bins");
  bench->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  bench->add_option("--csv", o.csv, "Write the histogram as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  o.retain_given = solve->count("--retain") > 0;

  const auto start = std::chrono::steady_clock::now();
  try {
    Json results;
    std::string command;
    if (*decompose) {
      command = "decompose";
      results = cmd_decompose(o);
    } else if (*ground) {
      command = "ground";
      results = cmd_ground(o);
    } else if (*solve) {
      command = "solve";
      results = cmd_solve(o);
    } else if (*sweep) {
      command = "sweep";
      results = cmd_sweep(o);
    } else {
      command = "random-bench";
      results = cmd_random_bench(o);
    }
    if (o.json) {
      Json config{{"seed", o.seed}, {"dense_limit", o.dense_limit}};
      if (!o.file.empty()) config["file"] = o.file;
      if (command == "solve" || command == "sweep") config["heuristic"] = o.heuristic;
      if (command == "sweep") config["threshold"] = o.threshold;
      if (command == "random-bench") {
        config["count"] = o.count;
        config["bins"] = o.bins;
      }
      Json report{{"command", command}, {"config", config}, {"results", results}};
      if (o.timing) {
        report["wall_time_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
      std::cout << report.dump(2) << "\n";
    }
  } catch (const csvqe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const csvqe::DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const csvqe::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const csvqe::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
