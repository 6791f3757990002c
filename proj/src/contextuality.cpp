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

#include "csvqe/contextuality.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "csvqe/errors.hpp"
#include "csvqe/pauli_group.hpp"

namespace csvqe {

namespace {

std::vector<PauliOperator> dedupe(std::span<const PauliOperator> s) {
  std::vector<PauliOperator> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    if (!s.empty() && p.num_qubits() != s.front().num_qubits()) {
      throw DimensionError("Pauli set mixes " +
                           std::to_string(s.front().num_qubits()) + " and " +
                           std::to_string(p.num_qubits()) + " qubit operators");
    }
    out.push_back(p.unsigned_part());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Universally commuting subset plus a tentative clique assignment of the
// remainder. Only meaningful as a decomposition once verified.
struct Structure {
  std::vector<PauliOperator> z_set;
  std::vector<std::vector<PauliOperator>> cliques;
};

Structure tentative_structure(const std::vector<PauliOperator>& ops) {
  Structure st;
  std::vector<PauliOperator> rest;
  for (const auto& a : ops) {
    const bool universal = std::all_of(
        ops.begin(), ops.end(), [&](const auto& b) { return commutes(a, b); });
    (universal ? st.z_set : rest).push_back(a);
  }
  for (const auto& a : rest) {
    auto it = std::find_if(st.cliques.begin(), st.cliques.end(),
                           [&](const auto& c) { return commutes(c.front(), a); });
    if (it == st.cliques.end()) {
      st.cliques.push_back({a});
    } else {
      it->push_back(a);
    }
  }
  return st;
}

std::optional<std::array<PauliOperator, 3>> find_violation(const Structure& st) {
  const auto& cl = st.cliques;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t a = 0; a < cl[i].size(); ++a) {
      for (std::size_t b = a + 1; b < cl[i].size(); ++b) {
        if (!commutes(cl[i][a], cl[i][b])) {
          // Both commute with the clique's first member.
          return std::array{cl[i][a], cl[i].front(), cl[i][b]};
        }
      }
      for (std::size_t j = i + 1; j < cl.size(); ++j) {
        for (const auto& other : cl[j]) {
          if (commutes(cl[i][a], other)) {
            // `other` was not placed in clique i, so it anticommutes with the
            // first member of clique i.
            return std::array{cl[i].front(), cl[i][a], other};
          }
        }
      }
    }
  }
  return std::nullopt;
}

NoncontextualDecomposition finish(Structure st, std::vector<PauliOperator> contextual,
                                  Hamiltonian source) {
  NoncontextualDecomposition d;
  std::sort(st.z_set.begin(), st.z_set.end());
  for (auto& c : st.cliques) std::sort(c.begin(), c.end());
  std::sort(st.cliques.begin(), st.cliques.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::sort(contextual.begin(), contextual.end());
  d.z_set = std::move(st.z_set);
  d.cliques = std::move(st.cliques);
  d.contextual_terms = std::move(contextual);
  d.source = std::move(source);
  return d;
}

std::string describe(const std::array<PauliOperator, 3>& w) {
  return w[0].str() + " ~ " + w[1].str() + " ~ " + w[2].str() + " but " +
         w[0].str() + " and " + w[2].str() + " anticommute";
}

PauliGroupBasis universal_group_basis(const Structure& st, std::size_t n) {
  PauliGroupBasis basis(n);
  for (const auto& z : st.z_set) basis.insert(z);
  for (const auto& clique : st.cliques) {
    for (std::size_t k = 1; k < clique.size(); ++k) {
      basis.insert(multiply(clique.front(), clique[k]).unsigned_part());
    }
  }
  return basis;
}

}  // namespace

std::vector<PauliOperator> NoncontextualDecomposition::noncontextual_terms()
    const {
  std::vector<PauliOperator> out = z_set;
  for (const auto& c : cliques) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::array<PauliOperator, 3>> contextual_witness(
    std::span<const PauliOperator> s) {
  return find_violation(tentative_structure(dedupe(s)));
}

bool is_noncontextual(std::span<const PauliOperator> s) {
  return !contextual_witness(s).has_value();
}

std::vector<PauliOperator> closure_under_inference(
    std::span<const PauliOperator> s, std::size_t limit) {
  std::vector<PauliOperator> items;
  std::set<PauliOperator> seen;
  for (const auto& p : dedupe(s)) {
    if (p.is_identity()) continue;
    items.push_back(p);
    seen.insert(p);
  }
  // Every pair (a, b) with a < b in `items` order is visited exactly once.
  for (std::size_t b = 1; b < items.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (!commutes(items[a], items[b])) continue;
      PauliOperator prod = multiply(items[a], items[b]).unsigned_part();
      if (prod.is_identity() || seen.contains(prod)) continue;
      if (items.size() >= limit) {
        throw ResourceError("closure under inference exceeds " +
                            std::to_string(limit) + " operators");
      }
      seen.insert(prod);
      items.push_back(prod);
    }
  }
  std::sort(items.begin(), items.end());
  return items;
}

NoncontextualDecomposition decompose(std::span<const PauliOperator> s) {
  auto ops = dedupe(s);
  Hamiltonian source(ops.empty() ? 0 : ops.front().num_qubits());
  for (const auto& p : ops) source.add_term(p, 1.0);
  return decompose(source, ops);
}

NoncontextualDecomposition decompose(const Hamiltonian& h,
                                     std::span<const PauliOperator> noncontextual) {
  auto ops = dedupe(noncontextual);
  for (const auto& p : ops) {
    if (p.num_qubits() != h.num_qubits()) {
      throw DimensionError("term " + p.str() + " does not act on " +
                           std::to_string(h.num_qubits()) + " qubits");
    }
    if (!h.contains(p)) {
      throw InvariantError("noncontextual term " + p.str() +
                           " is not a term of the Hamiltonian");
    }
  }
  Structure st = tentative_structure(ops);
  if (auto w = find_violation(st)) {
    throw ContextualityError("set is contextual: " + describe(*w));
  }
  std::set<PauliOperator> in_nc(ops.begin(), ops.end());
  std::vector<PauliOperator> contextual;
  for (const auto& [p, c] : h.terms()) {
    if (!in_nc.contains(p)) contextual.push_back(p);
  }
  return finish(std::move(st), std::move(contextual), h);
}

std::vector<PauliOperator> inferable_terms(
    std::span<const PauliOperator> noncontextual,
    std::span<const PauliOperator> terms) {
  auto ops = dedupe(noncontextual);
  std::vector<PauliOperator> out;
  if (ops.empty()) return out;
  Structure st = tentative_structure(ops);
  if (auto w = find_violation(st)) {
    throw ContextualityError("set is contextual: " + describe(*w));
  }
  const std::size_t n = ops.front().num_qubits();
  const PauliGroupBasis basis = universal_group_basis(st, n);
  std::set<PauliOperator> in_nc(ops.begin(), ops.end());
  for (const auto& t : terms) {
    const PauliOperator p = t.unsigned_part();
    if (p.is_identity() || in_nc.contains(p)) continue;
    bool inferable = basis.contains(p);
    for (std::size_t i = 0; !inferable && i < st.cliques.size(); ++i) {
      inferable = basis.contains(multiply(p, st.cliques[i].front()));
    }
    if (inferable) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NoncontextualDecomposition greedy_noncontextual_subset(const Hamiltonian& h) {
  std::vector<std::pair<PauliOperator, double>> order(h.terms().begin(),
                                                      h.terms().end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  const std::vector<PauliOperator> all = h.paulis();

  std::vector<PauliOperator> selected;
  std::set<PauliOperator> in_selected;
  for (const auto& [candidate, coefficient] : order) {
    if (in_selected.contains(candidate)) continue;
    std::vector<PauliOperator> trial = selected;
    trial.push_back(candidate);
    bool accepted = false;
    while (is_noncontextual(trial)) {
      auto implied = inferable_terms(trial, all);
      if (implied.empty()) {
        accepted = true;
        break;
      }
      trial.insert(trial.end(), implied.begin(), implied.end());
    }
    if (accepted) {
      selected = std::move(trial);
      in_selected = std::set<PauliOperator>(selected.begin(), selected.end());
    }
  }
  return decompose(h, selected);
}

void validate(const NoncontextualDecomposition& d) {
  const auto nc = d.noncontextual_terms();
  std::vector<PauliOperator> all = nc;
  all.insert(all.end(), d.contextual_terms.begin(), d.contextual_terms.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvariantError("decomposition parts overlap");
  }
  if (all != d.source.paulis()) {
    throw InvariantError("decomposition does not partition the source terms");
  }
  for (const auto& z : d.z_set) {
    for (const auto& p : nc) {
      if (!commutes(z, p)) {
        throw InvariantError("Z-set member " + z.str() +
                             " anticommutes with " + p.str());
      }
    }
  }
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    for (const auto& a : d.cliques[i]) {
      const bool universal = std::all_of(
          nc.begin(), nc.end(), [&](const auto& p) { return commutes(a, p); });
      if (universal) {
        throw InvariantError("clique member " + a.str() +
                             " commutes with all noncontextual terms");
      }
      for (std::size_t j = 0; j < d.cliques.size(); ++j) {
        for (const auto& b : d.cliques[j]) {
          if (commutes(a, b) != (i == j)) {
            throw InvariantError("clique structure violated by " + a.str() +
                                 " and " + b.str());
          }
        }
      }
    }
  }
  const auto implied = inferable_terms(nc, all);
  if (!implied.empty()) {
    throw InvariantError("noncontextual part is not closed under inference: " +
                         implied.front().str() + " is inferable");
  }
}

}  // namespace csvqe
