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

#include <Eigen/Dense>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace csvqe {

inline constexpr std::size_t kMaxQubits = 64;

/// Coefficients with magnitude below this are dropped after arithmetic.
inline constexpr double kPruneTolerance = 1e-12;

inline constexpr std::size_t kDefaultDenseLimit = 14;

/// An n-qubit Pauli operator i^phase * (P_0 (x) P_1 (x) ... (x) P_{n-1}).
///
/// Each single-qubit factor is stored symplectically: bit q of x_bits / z_bits
/// gives (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z on qubit q. Note Y is the named
/// Pauli Y (not XZ), so an operator is Hermitian iff phase_exp is 0 or 2.
/// Qubit 0 is the leftmost letter of the string form.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits);
  PauliOperator(std::size_t num_qubits, std::uint64_t x_bits,
                std::uint64_t z_bits, int phase_exp = 0);

  /// Parses strings such as "IXYZ", "-XZ", "+iYY" or "-iZ". Only the letters
  /// I, X, Y, Z are accepted for the tensor factors.
  static PauliOperator from_string(std::string_view text);

  /// Single-qubit factor `letter` on `qubit`, identity elsewhere.
  static PauliOperator single(std::size_t num_qubits, std::size_t qubit,
                              char letter);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  char letter(std::size_t qubit) const;
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_diagonal() const { return x_ == 0; }
  std::size_t weight() const;
  std::uint64_t support() const { return x_ | z_; }

  /// +1 or -1 for Hermitian operators.
  int sign() const;

  /// Same tensor factors with phase_exp 0.
  PauliOperator unsigned_part() const;
  PauliOperator with_phase(int phase_exp) const;
  PauliOperator negated() const { return with_phase(phase_ + 2); }

  /// Tensor factors only, e.g. "IXZ".
  std::string str() const;
  /// Phase prefix plus factors: "+IXZ", "-IXZ", "+iIXZ", "-iIXZ".
  std::string signed_str() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  /// Orders by qubit count, then by string form (I < X < Y < Z, qubit 0
  /// most significant), then by phase.
  friend std::strong_ordering operator<=>(const PauliOperator& a,
                                          const PauliOperator& b);

 private:
  std::size_t num_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// Product a*b with exact phase tracking.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  return multiply(a, b);
}

/// True iff the symplectic inner product of a and b vanishes mod 2.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// Real linear combination of Hermitian Pauli operators plus an identity
/// offset. Keys are stored with phase_exp 0; signs are folded into the
/// coefficients and identity terms into `constant()`.
class Hamiltonian {
 public:
  using TermMap = std::map<PauliOperator, double>;

  Hamiltonian() = default;
  explicit Hamiltonian(std::size_t num_qubits, double constant = 0.0);

  /// Accumulates coefficient * p. Throws DimensionError on a qubit-count
  /// mismatch and InvariantError for non-Hermitian p.
  void add_term(const PauliOperator& p, double coefficient);
  void add_term(std::string_view pauli, double coefficient);
  void add_constant(double value) { constant_ += value; }

  /// Drops entries with |coefficient| < tolerance.
  void prune(double tolerance = kPruneTolerance);

  std::size_t num_qubits() const { return num_qubits_; }
  double constant() const { return constant_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the phase-free key of p (0 if absent).
  double coefficient(const PauliOperator& p) const;
  bool contains(const PauliOperator& p) const;

  /// Keys in lexicographic order.
  std::vector<PauliOperator> paulis() const;

  /// Sum of |coefficient| over non-identity terms.
  double one_norm() const;

  /// Keeps only the listed terms (with their coefficients) and no constant.
  Hamiltonian subset(const std::vector<PauliOperator>& keep) const;

  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

 private:
  std::size_t num_qubits_ = 0;
  double constant_ = 0.0;
  TermMap terms_;
};

enum class RotationKind { kCliffordQuarterTurn, kContinuous };

/// Conjugation by U = exp(i * angle/2 * generator). A Pauli Q that
/// anticommutes with the generator J maps to cos(angle) Q + sin(angle) iJQ;
/// commuting Paulis are unchanged. A quarter turn is angle = pi/2, which maps
/// Q to the single Pauli iJQ.
struct RotationStep {
  PauliOperator generator;
  RotationKind kind = RotationKind::kCliffordQuarterTurn;
  double angle = 0.0;  // used only for kContinuous

  static RotationStep quarter_turn(PauliOperator generator);
  static RotationStep continuous(PauliOperator generator, double angle);

  bool is_clifford() const { return kind == RotationKind::kCliffordQuarterTurn; }
  double effective_angle() const;

  /// The step undoing this one.
  RotationStep inverse() const;

  friend bool operator==(const RotationStep&, const RotationStep&) = default;
};

/// Image of a single Pauli under a quarter-turn step (phase tracked).
PauliOperator conjugate_by_rotation(const PauliOperator& p,
                                    const RotationStep& step);

Hamiltonian conjugate_by_rotation(const Hamiltonian& h,
                                  const RotationStep& step);

using DenseMatrix = Eigen::MatrixXcd;

/// Dense 2^n x 2^n matrix; qubit 0 is the most significant bit of the basis
/// index. Throws ResourceError when n exceeds dense_limit.
DenseMatrix to_dense_matrix(const PauliOperator& p,
                            std::size_t dense_limit = kDefaultDenseLimit);
DenseMatrix to_dense_matrix(const Hamiltonian& h,
                            std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace csvqe
