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

#include "csvqe/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "csvqe/heuristics.hpp"
#include "csvqe/oracle.hpp"
#include "csvqe/rng.hpp"

namespace csvqe {

namespace {

std::vector<PauliOperator> parse_all(std::initializer_list<const char*> terms) {
  std::vector<PauliOperator> out;
  for (const char* t : terms) out.push_back(PauliOperator::from_string(t));
  return out;
}

constexpr double kExcludeBelow = 1e-8;

}  // namespace

std::vector<PauliOperator> example_noncontextual_terms() {
  return parse_all({"ZII", "IXI", "IYI", "IZX", "IZY", "IZZ", "ZXI", "ZYI",
                    "ZZX", "ZZY", "ZZZ"});
}

std::vector<PauliOperator> example_contextual_terms() {
  return parse_all({"IIX", "IIY", "IIZ"});
}

Hamiltonian random_example_hamiltonian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Hamiltonian h(3);
  for (const auto& p : example_noncontextual_terms()) h.add_term(p, coef(rng));
  for (const auto& p : example_contextual_terms()) h.add_term(p, coef(rng));
  return h;
}

Hamiltonian random_pauli_hamiltonian(std::size_t n, std::size_t max_terms,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const std::size_t target = count(rng);
  std::set<PauliOperator> chosen;
  for (std::size_t attempt = 0; chosen.size() < target && attempt < 100 * target;
       ++attempt) {
    PauliOperator p(n, bits(rng), bits(rng));
    if (!p.is_identity()) chosen.insert(p);
  }
  Hamiltonian h(n);
  for (const auto& p : chosen) h.add_term(p, coef(rng));
  return h;
}

BenchInstance run_bench_instance(std::uint64_t seed, std::size_t index) {
  auto rng = stream_engine(seed, index);
  const Hamiltonian h = random_example_hamiltonian(rng);
  ContextConfig cfg;
  cfg.noncontextual = example_noncontextual_terms();
  const CsvqeContext ctx = CsvqeContext::create(h, cfg);

  BenchInstance out;
  out.exact = exact_ground_energy(h);
  out.nc_energy = ctx.ground.energy;
  out.corrected = ctx.evaluate(ctx.all_generators());
  out.excluded = std::abs(out.exact) < kExcludeBelow;
  if (!out.excluded) {
    out.nc_error = std::abs(out.nc_energy - out.exact) / std::abs(out.exact);
    out.corrected_error = std::abs(out.corrected - out.exact) / std::abs(out.exact);
  }
  return out;
}

BenchResult random_bench(const BenchConfig& cfg) {
  BenchResult result;
  result.instances.resize(cfg.count);
  const std::size_t threads = std::max<std::size_t>(
      1, std::min<std::size_t>(cfg.threads ? cfg.threads
                                           : std::thread::hardware_concurrency(),
                               std::max<std::size_t>(cfg.count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.count; i = next++) {
      result.instances[i] = run_bench_instance(cfg.seed, i);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  double nc_sum = 0.0;
  double corrected_sum = 0.0;
  double max_error = 0.0;
  for (const auto& inst : result.instances) {
    if (inst.corrected > inst.nc_energy + 1e-9) ++result.ordering_violations;
    if (inst.excluded) {
      ++result.excluded;
      continue;
    }
    nc_sum += inst.nc_error;
    corrected_sum += inst.corrected_error;
    max_error = std::max({max_error, inst.nc_error, inst.corrected_error});
  }
  const std::size_t used = cfg.count - result.excluded;
  if (used > 0) {
    result.mean_nc_error = nc_sum / static_cast<double>(used);
    result.mean_corrected_error = corrected_sum / static_cast<double>(used);
  }

  const std::size_t bins = std::max<std::size_t>(cfg.bins, 1);
  auto& hist = result.histogram;
  const double top = max_error > 0.0 ? max_error : 1.0;
  for (std::size_t b = 0; b <= bins; ++b) {
    hist.edges.push_back(top * static_cast<double>(b) / static_cast<double>(bins));
  }
  hist.nc_counts.assign(bins, 0);
  hist.corrected_counts.assign(bins, 0);
  auto bin_of = [&](double v) {
    const auto b = static_cast<std::size_t>(v / top * static_cast<double>(bins));
    return std::min(b, bins - 1);
  };
  for (const auto& inst : result.instances) {
    if (inst.excluded) continue;
    ++hist.nc_counts[bin_of(inst.nc_error)];
    ++hist.corrected_counts[bin_of(inst.corrected_error)];
  }
  return result;
}

}  // namespace csvqe
