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

#include "csvqe/heuristics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "csvqe/errors.hpp"

namespace csvqe {

namespace {

constexpr double kTieTolerance = 1e-12;

std::vector<std::size_t> without(const std::vector<std::size_t>& from,
                                 std::initializer_list<std::size_t> drop) {
  std::vector<std::size_t> out;
  for (std::size_t j : from) {
    if (std::find(drop.begin(), drop.end(), j) == drop.end()) out.push_back(j);
  }
  return out;
}

class SweepBuilder {
 public:
  SweepBuilder(const CsvqeContext& ctx, Heuristic heuristic, const SweepConfig& cfg)
      : ctx_(ctx) {
    result_.heuristic = heuristic;
    result_.nc_energy = ctx.ground.energy;
    if (cfg.compute_exact) {
      try {
        result_.exact_energy = lowest_eigenpair(ctx.h, std::nullopt, ctx.solver.eigen).value;
      } catch (const ResourceError&) {
      }
    }
  }

  // Energy of a retained set, or nullopt (and the sweep marked truncated)
  // if the register is too large.
  std::optional<double> energy(const std::vector<std::size_t>& retained) {
    if (auto it = cache_.find(retained); it != cache_.end()) return it->second;
    try {
      const double e = ctx_.evaluate(retained);
      cache_.emplace(retained, e);
      return e;
    } catch (const ResourceError& err) {
      if (!result_.truncated) {
        result_.truncated = true;
        result_.truncation_reason = err.what();
      }
      return std::nullopt;
    }
  }

  void record(const std::vector<std::size_t>& retained, double e) {
    SweepRecord r;
    r.quantum_qubits = ctx_.quantum_qubits(retained.size());
    r.retained = retained;
    r.energy = e;
    r.restricted_term_count = ctx_.problem(retained).restricted_contextual.size();
    if (result_.exact_energy) r.error_vs_exact = e - *result_.exact_energy;
    records_.push_back(std::move(r));
  }

  SweepResult finish(bool reverse) {
    if (reverse) std::reverse(records_.begin(), records_.end());
    SweepRecord nc;
    nc.quantum_qubits = 0;
    nc.retained = ctx_.all_generators();
    nc.energy = result_.nc_energy;
    nc.corrected = false;
    nc.restricted_term_count = 0;
    if (result_.exact_energy) nc.error_vs_exact = nc.energy - *result_.exact_energy;
    result_.records.push_back(std::move(nc));
    for (auto& r : records_) result_.records.push_back(std::move(r));
    return std::move(result_);
  }

  bool truncated() const { return result_.truncated; }

 private:
  const CsvqeContext& ctx_;
  SweepResult result_;
  std::vector<SweepRecord> records_;
  std::map<std::vector<std::size_t>, double> cache_;
};

// Pair (or, with one generator left, single) drop minimizing the energy.
// Candidates are scanned in lexicographic order and only a strictly lower
// energy displaces the incumbent.
std::optional<std::pair<std::vector<std::size_t>, double>> best_pair_drop(
    SweepBuilder& b, const std::vector<std::size_t>& retained) {
  std::optional<std::pair<std::vector<std::size_t>, double>> best;
  auto consider = [&](std::vector<std::size_t> candidate) {
    auto e = b.energy(candidate);
    if (!e) return false;
    if (!best || *e < best->second - kTieTolerance) best.emplace(std::move(candidate), *e);
    return true;
  };
  if (retained.size() == 1) {
    consider({});
    return best;
  }
  for (std::size_t a = 0; a < retained.size(); ++a) {
    for (std::size_t c = a + 1; c < retained.size(); ++c) {
      if (!consider(without(retained, {retained[a], retained[c]}))) return std::nullopt;
    }
  }
  return best;
}

std::optional<std::pair<std::vector<std::size_t>, double>> best_single_drop(
    SweepBuilder& b, const std::vector<std::size_t>& retained) {
  std::optional<std::pair<std::vector<std::size_t>, double>> best;
  for (std::size_t j : retained) {
    auto candidate = without(retained, {j});
    auto e = b.energy(candidate);
    if (!e) return std::nullopt;
    if (!best || *e < best->second - kTieTolerance) best.emplace(std::move(candidate), *e);
  }
  return best;
}

// One generator added to `retained` (ascending) minimizing the energy.
std::optional<std::pair<std::vector<std::size_t>, double>> best_single_add(
    SweepBuilder& b, const std::vector<std::size_t>& retained, std::size_t m) {
  std::optional<std::pair<std::vector<std::size_t>, double>> best;
  for (std::size_t j = 0; j < m; ++j) {
    if (std::binary_search(retained.begin(), retained.end(), j)) continue;
    auto candidate = retained;
    candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), j), j);
    auto e = b.energy(candidate);
    if (!e) continue;  // larger retained sets are smaller problems
    if (!best || *e < best->second - kTieTolerance) best.emplace(std::move(candidate), *e);
  }
  return best;
}

}  // namespace

CsvqeContext CsvqeContext::create(const Hamiltonian& h, const ContextConfig& cfg) {
  CsvqeContext ctx;
  ctx.h = h;
  ctx.decomposition = cfg.noncontextual ? decompose(h, *cfg.noncontextual)
                                        : greedy_noncontextual_subset(h);
  ctx.model = build_model(ctx.decomposition);
  ctx.ground = find_ground_state(ctx.model, cfg.ground);
  ctx.solver = cfg.solver;
  return ctx;
}

std::vector<std::size_t> CsvqeContext::all_generators() const {
  std::vector<std::size_t> out(num_generators());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

CSVQEProblem CsvqeContext::problem(std::span<const std::size_t> retained) const {
  return build_problem(h, model, ground.state, retained, solver);
}

double CsvqeContext::evaluate(std::span<const std::size_t> retained) const {
  return solve(problem(retained), solver);
}

CSVQEProblem remove_generators(const CsvqeContext& ctx,
                               std::span<const std::size_t> retained,
                               std::span<const std::size_t> drop) {
  std::set<std::size_t> keep(retained.begin(), retained.end());
  for (std::size_t j : drop) {
    if (keep.erase(j) == 0) {
      throw DimensionError("generator " + std::to_string(j) + " is not retained");
    }
  }
  const std::vector<std::size_t> left(keep.begin(), keep.end());
  return ctx.problem(left);
}

std::string to_string(Heuristic h) {
  switch (h) {
    case Heuristic::kGreedyPair:
      return "greedy-pair";
    case Heuristic::kOptimal:
      return "optimal";
    case Heuristic::kWeight:
      return "weight";
  }
  return "unknown";
}

Heuristic parse_heuristic(const std::string& name) {
  if (name == "greedy-pair") return Heuristic::kGreedyPair;
  if (name == "optimal") return Heuristic::kOptimal;
  if (name == "weight") return Heuristic::kWeight;
  throw ParseError("unknown heuristic '" + name +
                   "' (expected greedy-pair, optimal or weight)");
}

SweepResult greedy_pair_sweep(const CsvqeContext& ctx, const SweepConfig& cfg) {
  SweepBuilder b(ctx, Heuristic::kGreedyPair, cfg);
  std::vector<std::size_t> retained = ctx.all_generators();
  auto e = b.energy(retained);
  if (!e) return b.finish(false);
  b.record(retained, *e);
  while (!retained.empty()) {
    auto next = best_pair_drop(b, retained);
    if (!next) break;
    retained = std::move(next->first);
    b.record(retained, next->second);
  }
  return b.finish(false);
}

SweepResult optimal_sweep(const CsvqeContext& ctx, const SweepConfig& cfg) {
  SweepBuilder b(ctx, Heuristic::kOptimal, cfg);
  std::vector<std::size_t> retained;
  const std::size_t m = ctx.num_generators();
  // The chain is built from the full-VQE end, so sizes above the limit are
  // skipped until a retained set becomes solvable.
  if (auto e = b.energy(retained)) b.record(retained, *e);
  while (retained.size() < m) {
    auto next = best_single_add(b, retained, m);
    if (!next) {
      // Nothing solvable yet: grow by the lowest free index and retry.
      std::size_t j = 0;
      while (std::binary_search(retained.begin(), retained.end(), j)) ++j;
      retained.insert(std::upper_bound(retained.begin(), retained.end(), j), j);
      continue;
    }
    retained = std::move(next->first);
    b.record(retained, next->second);
  }
  return b.finish(true);
}

std::vector<std::size_t> weight_order(const CsvqeContext& ctx, WeightMetric metric) {
  const auto all = ctx.all_generators();
  const CSVQEProblem full = ctx.problem(all);
  std::vector<double> weight(all.size(), 0.0);
  for (std::size_t j = 0; j < all.size(); ++j) {
    const std::size_t q = full.plan.targets[j].qubit;
    for (const auto& [p, c] : full.rotated_h.terms()) {
      if ((p.support() >> q) & 1U) {
        weight[j] += metric == WeightMetric::kCoefficientSum ? std::abs(c) : 1.0;
      }
    }
  }
  std::vector<std::size_t> order = all;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
  return order;
}

SweepResult weight_sweep(const CsvqeContext& ctx, const SweepConfig& cfg) {
  SweepBuilder b(ctx, Heuristic::kWeight, cfg);
  const auto order = weight_order(ctx, cfg.weight_metric);
  std::set<std::size_t> keep(order.begin(), order.end());
  auto as_vector = [&] { return std::vector<std::size_t>(keep.begin(), keep.end()); };
  for (std::size_t k = 0; k <= order.size(); ++k) {
    if (k > 0) keep.erase(order[k - 1]);
    const auto retained = as_vector();
    auto e = b.energy(retained);
    if (!e) break;
    b.record(retained, *e);
  }
  return b.finish(false);
}

SweepResult sweep(const CsvqeContext& ctx, Heuristic heuristic, const SweepConfig& cfg) {
  switch (heuristic) {
    case Heuristic::kGreedyPair:
      return greedy_pair_sweep(ctx, cfg);
    case Heuristic::kOptimal:
      return optimal_sweep(ctx, cfg);
    case Heuristic::kWeight:
      return weight_sweep(ctx, cfg);
  }
  throw InvariantError("unhandled heuristic");
}

std::vector<std::size_t> retained_for_qubits(const CsvqeContext& ctx,
                                             Heuristic heuristic, std::size_t k,
                                             WeightMetric metric) {
  const std::size_t n = ctx.h.num_qubits();
  const std::size_t m = ctx.num_generators();
  if (k < n - m || k > n) {
    throw DimensionError("quantum register of " + std::to_string(k) +
                         " qubits outside [" + std::to_string(n - m) + ", " +
                         std::to_string(n) + "]");
  }
  const std::size_t target = n - k;  // retained generators wanted
  SweepConfig cfg;
  cfg.compute_exact = false;
  SweepBuilder b(ctx, heuristic, cfg);
  auto fail = [&] {
    return ResourceError("cannot evaluate candidates for a " + std::to_string(k) +
                         "-qubit register");
  };

  if (heuristic == Heuristic::kWeight) {
    const auto order = weight_order(ctx, metric);
    std::set<std::size_t> keep(order.begin(), order.end());
    for (std::size_t i = 0; i < m - target; ++i) keep.erase(order[i]);
    return {keep.begin(), keep.end()};
  }
  if (heuristic == Heuristic::kOptimal) {
    std::vector<std::size_t> retained;
    while (retained.size() < target) {
      auto next = best_single_add(b, retained, m);
      if (!next) throw fail();
      retained = std::move(next->first);
    }
    return retained;
  }
  std::vector<std::size_t> retained = ctx.all_generators();
  while (retained.size() >= target + 2) {
    auto next = best_pair_drop(b, retained);
    if (!next) throw fail();
    retained = std::move(next->first);
  }
  if (retained.size() == target + 1) {
    auto next = best_single_drop(b, retained);
    if (!next) throw fail();
    retained = std::move(next->first);
  }
  return retained;
}

}  // namespace csvqe
