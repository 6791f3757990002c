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

#include "csvqe/eigensolver.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "csvqe/errors.hpp"

namespace csvqe {

namespace {

// Qubit q is bit (n - 1 - q) of the basis index.
std::uint64_t to_index_bits(std::uint64_t qubit_bits, std::size_t n) {
  std::uint64_t out = 0;
  while (qubit_bits != 0) {
    const int q = std::countr_zero(qubit_bits);
    out |= std::uint64_t{1} << (n - 1 - static_cast<std::size_t>(q));
    qubit_bits &= qubit_bits - 1;
  }
  return out;
}

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw ResourceError(std::to_string(n) + " qubits exceed the dense limit of " +
                        std::to_string(limit));
  }
}

StateVector random_start(std::size_t dim) {
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  StateVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {normal(rng), normal(rng)};
  return v.normalized();
}

// Lowest eigenpair of the operator `op` on the subspace selected by
// `project` (identity when no constraint). Thick restart with one vector.
template <typename Op, typename Project>
EigenResult lanczos(std::size_t dim, const Op& op, const Project& project,
                    const EigenConfig& cfg) {
  StateVector v = random_start(dim);
  project(v);
  if (v.norm() == 0.0) throw InvariantError("constrained subspace is empty");
  v.normalize();

  const std::size_t m_max = std::min<std::size_t>(cfg.krylov_dimension, dim);
  std::vector<StateVector> basis;
  StateVector w;
  EigenResult best;
  for (std::size_t restart = 0; restart <= cfg.max_restarts; ++restart) {
    basis.clear();
    basis.push_back(v);
    std::vector<double> alpha, beta;
    for (std::size_t j = 0; j < m_max; ++j) {
      op(basis[j], w);
      project(w);
      alpha.push_back(basis[j].dot(w).real());
      // Full reorthogonalization, twice for stability.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) w -= b * b.dot(w);
      }
      const double b_norm = w.norm();
      if (j + 1 == m_max || b_norm < 1e-12) break;
      beta.push_back(b_norm);
      basis.push_back(w / b_norm);
    }
    const auto k = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      t(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < k) {
        t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
    const Eigen::VectorXd y = tri.eigenvectors().col(0);
    StateVector ritz = StateVector::Zero(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < k; ++i) ritz += basis[static_cast<std::size_t>(i)] * y[i];
    project(ritz);
    ritz.normalize();
    op(ritz, w);
    project(w);
    const double theta = ritz.dot(w).real();
    const double residual = (w - theta * ritz).norm();
    best.value = theta;
    best.vector = ritz;
    if (residual < cfg.tolerance * std::max(1.0, std::abs(theta)) ||
        static_cast<std::size_t>(k) == dim) {
      return best;
    }
    v = ritz;
  }
  if (std::isfinite(best.value)) return best;
  throw InvariantError("Lanczos iteration did not converge");
}

}  // namespace

PauliMatvec::PauliMatvec(const Hamiltonian& h)
    : num_qubits_(h.num_qubits()), constant_(h.constant()) {
  for (const auto& [p, c] : h.terms()) {
    Entry e;
    e.flip = to_index_bits(p.x_bits(), num_qubits_);
    e.phase = to_index_bits(p.z_bits(), num_qubits_);
    // Y = i X Z in the computational basis.
    const int y_count = std::popcount(p.x_bits() & p.z_bits());
    static const std::complex<double> kPowers[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    e.weight = c * kPowers[(p.phase_exp() + y_count) & 3];
    entries_.push_back(e);
  }
}

void PauliMatvec::apply(const StateVector& in, StateVector& out) const {
  const auto dim = static_cast<std::uint64_t>(dimension());
  out = constant_ * in;
  for (const auto& e : entries_) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(e.phase & b) & 1) ? -1.0 : 1.0;
      out[static_cast<Eigen::Index>(b ^ e.flip)] +=
          e.weight * s * in[static_cast<Eigen::Index>(b)];
    }
  }
}

double PauliMatvec::expectation(const StateVector& psi) const {
  StateVector hpsi;
  apply(psi, hpsi);
  return psi.dot(hpsi).real();
}

Eigen::MatrixXcd plus_eigenspace(const Hamiltonian& constraint,
                                 std::size_t dense_limit) {
  check_limit(constraint.num_qubits(), dense_limit);
  const DenseMatrix a = to_dense_matrix(constraint, dense_limit);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(a);
  const Eigen::VectorXd& ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(std::abs(ev[i]) - 1.0) > 1e-8) {
      throw InvariantError("constraint operator does not square to the identity");
    }
  }
  Eigen::Index first = 0;
  while (first < ev.size() && ev[first] < 0.0) ++first;
  return es.eigenvectors().rightCols(ev.size() - first);
}

EigenResult lowest_eigenpair(const Hamiltonian& h,
                             const std::optional<Hamiltonian>& constraint,
                             const EigenConfig& cfg) {
  const std::size_t n = h.num_qubits();
  check_limit(n, cfg.dense_limit);
  if (constraint && constraint->num_qubits() != n) {
    throw DimensionError("constraint acts on " +
                         std::to_string(constraint->num_qubits()) +
                         " qubits, Hamiltonian on " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;

  if (n <= cfg.direct_limit) {
    const DenseMatrix hm = to_dense_matrix(h, cfg.dense_limit);
    EigenResult out;
    if (!constraint) {
      Eigen::SelfAdjointEigenSolver<DenseMatrix> es(hm);
      out.value = es.eigenvalues()[0];
      out.vector = es.eigenvectors().col(0);
      return out;
    }
    const Eigen::MatrixXcd v = plus_eigenspace(*constraint, cfg.dense_limit);
    if (v.cols() == 0) throw InvariantError("constrained subspace is empty");
    const DenseMatrix reduced = v.adjoint() * hm * v;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(reduced);
    out.value = es.eigenvalues()[0];
    out.vector = (v * es.eigenvectors().col(0)).normalized();
    return out;
  }

  const PauliMatvec hop(h);
  auto op = [&](const StateVector& in, StateVector& out) { hop.apply(in, out); };
  if (!constraint) {
    return lanczos(dim, op, [](StateVector&) {}, cfg);
  }
  const PauliMatvec aop(*constraint);
  StateVector scratch;
  auto project = [&](StateVector& x) {
    aop.apply(x, scratch);
    x = 0.5 * (x + scratch);
  };
  return lanczos(dim, op, project, cfg);
}

}  // namespace csvqe
