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

#include "csvqe/pauli.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "csvqe/errors.hpp"

namespace csvqe {

namespace {

std::uint64_t mask_for(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_qubit_count(std::size_t n) {
  if (n > kMaxQubits) {
    throw DimensionError("at most " + std::to_string(kMaxQubits) +
                         " qubits are supported, got " + std::to_string(n));
  }
}

void check_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("qubit count mismatch: " +
                         std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()));
  }
}

// I=0, X=1, Y=2, Z=3, matching the alphabetical order of the letters.
int letter_code(bool x, bool z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); }

const std::complex<double> kIPow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

PauliOperator::PauliOperator(std::size_t num_qubits)
    : PauliOperator(num_qubits, 0, 0, 0) {}

PauliOperator::PauliOperator(std::size_t num_qubits, std::uint64_t x_bits,
                             std::uint64_t z_bits, int phase_exp)
    : num_qubits_(num_qubits), x_(x_bits), z_(z_bits),
      phase_(((phase_exp % 4) + 4) % 4) {
  check_qubit_count(num_qubits);
  if (((x_ | z_) & ~mask_for(num_qubits)) != 0) {
    throw DimensionError("Pauli bits set beyond qubit count " +
                         std::to_string(num_qubits));
  }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  int phase = 0;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    if (body.front() == '-') phase += 2;
    body.remove_prefix(1);
  }
  if (!body.empty() && body.front() == 'i') {
    phase += 1;
    body.remove_prefix(1);
  }
  if (body.size() > kMaxQubits) {
    throw ParseError("Pauli string too long: '" + std::string(text) + "'");
  }
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < body.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (body[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, body[q]) +
                         "' in Pauli string '" + std::string(text) + "'");
    }
  }
  return PauliOperator(body.size(), x, z, phase);
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit,
                                    char letter) {
  if (qubit >= num_qubits) {
    throw DimensionError("qubit index " + std::to_string(qubit) +
                         " out of range for " + std::to_string(num_qubits) +
                         " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I':
      return PauliOperator(num_qubits);
    case 'X':
      return PauliOperator(num_qubits, bit, 0);
    case 'Y':
      return PauliOperator(num_qubits, bit, bit);
    case 'Z':
      return PauliOperator(num_qubits, 0, bit);
    default:
      throw ParseError("invalid Pauli letter '" + std::string(1, letter) + "'");
  }
}

char PauliOperator::letter(std::size_t qubit) const {
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  return "IXYZ"[letter_code(x, z)];
}

std::size_t PauliOperator::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

int PauliOperator::sign() const {
  if (!is_hermitian()) {
    throw InvariantError("sign() of non-Hermitian Pauli " + signed_str());
  }
  return phase_ == 0 ? 1 : -1;
}

PauliOperator PauliOperator::unsigned_part() const { return with_phase(0); }

PauliOperator PauliOperator::with_phase(int phase_exp) const {
  return PauliOperator(num_qubits_, x_, z_, phase_exp);
}

std::string PauliOperator::str() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t q = 0; q < num_qubits_; ++q) out[q] = letter(q);
  return out;
}

std::string PauliOperator::signed_str() const {
  static const char* const kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + str();
}

std::strong_ordering operator<=>(const PauliOperator& a,
                                 const PauliOperator& b) {
  if (auto c = a.num_qubits_ <=> b.num_qubits_; c != 0) return c;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff != 0) {
    const int q = std::countr_zero(diff);
    const int ca = letter_code((a.x_ >> q) & 1U, (a.z_ >> q) & 1U);
    const int cb = letter_code((b.x_ >> q) & 1U, (b.z_ >> q) & 1U);
    return ca <=> cb;
  }
  return a.phase_ <=> b.phase_;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  check_same_size(a, b);
  const std::uint64_t ax = a.x_bits(), az = a.z_bits();
  const std::uint64_t bx = b.x_bits(), bz = b.z_bits();
  const std::uint64_t a_x = ax & ~az, a_y = ax & az, a_z = ~ax & az;
  const std::uint64_t b_x = bx & ~bz, b_y = bx & bz, b_z = ~bx & bz;
  // XY = iZ, YZ = iX, ZX = iY; reversed orders pick up -i.
  const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
  const std::uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
  const int phase = a.phase_exp() + b.phase_exp() + std::popcount(plus) -
                    std::popcount(minus);
  return PauliOperator(a.num_qubits(), ax ^ bx, az ^ bz, phase);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  check_same_size(a, b);
  const std::uint64_t form =
      (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return (std::popcount(form) & 1) == 0;
}

// ---------------------------------------------------------------------------

Hamiltonian::Hamiltonian(std::size_t num_qubits, double constant)
    : num_qubits_(num_qubits), constant_(constant) {
  check_qubit_count(num_qubits);
}

void Hamiltonian::add_term(const PauliOperator& p, double coefficient) {
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("term " + p.str() + " has " +
                         std::to_string(p.num_qubits()) +
                         " qubits, Hamiltonian has " +
                         std::to_string(num_qubits_));
  }
  if (!p.is_hermitian()) {
    throw InvariantError("non-Hermitian term " + p.signed_str() +
                         " in a real-coefficient Hamiltonian");
  }
  const double value = coefficient * p.sign();
  if (p.is_identity()) {
    constant_ += value;
    return;
  }
  terms_[p.unsigned_part()] += value;
}

void Hamiltonian::add_term(std::string_view pauli, double coefficient) {
  add_term(PauliOperator::from_string(pauli), coefficient);
}

void Hamiltonian::prune(double tolerance) {
  std::erase_if(terms_, [tolerance](const auto& entry) {
    return std::abs(entry.second) < tolerance;
  });
}

double Hamiltonian::coefficient(const PauliOperator& p) const {
  auto it = terms_.find(p.unsigned_part());
  return it == terms_.end() ? 0.0 : it->second;
}

bool Hamiltonian::contains(const PauliOperator& p) const {
  return terms_.contains(p.unsigned_part());
}

std::vector<PauliOperator> Hamiltonian::paulis() const {
  std::vector<PauliOperator> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

double Hamiltonian::one_norm() const {
  double total = 0.0;
  for (const auto& [p, c] : terms_) total += std::abs(c);
  return total;
}

Hamiltonian Hamiltonian::subset(const std::vector<PauliOperator>& keep) const {
  Hamiltonian out(num_qubits_);
  for (const auto& p : keep) {
    auto it = terms_.find(p.unsigned_part());
    if (it != terms_.end()) out.terms_[it->first] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------

RotationStep RotationStep::quarter_turn(PauliOperator generator) {
  return RotationStep{std::move(generator), RotationKind::kCliffordQuarterTurn,
                      0.0};
}

RotationStep RotationStep::continuous(PauliOperator generator, double angle) {
  return RotationStep{std::move(generator), RotationKind::kContinuous, angle};
}

double RotationStep::effective_angle() const {
  return is_clifford() ? std::numbers::pi / 2 : angle;
}

RotationStep RotationStep::inverse() const {
  if (is_clifford()) return quarter_turn(generator.negated());
  return continuous(generator, -angle);
}

PauliOperator conjugate_by_rotation(const PauliOperator& p,
                                    const RotationStep& step) {
  if (!step.is_clifford()) {
    throw InvariantError(
        "a continuous rotation does not map a Pauli to a single Pauli");
  }
  if (commutes(step.generator, p)) return p;
  return multiply(step.generator.with_phase(step.generator.phase_exp() + 1),
                  p);
}

Hamiltonian conjugate_by_rotation(const Hamiltonian& h,
                                  const RotationStep& step) {
  if (step.generator.num_qubits() != h.num_qubits()) {
    throw DimensionError("rotation generator has " +
                         std::to_string(step.generator.num_qubits()) +
                         " qubits, Hamiltonian has " +
                         std::to_string(h.num_qubits()));
  }
  if (!step.generator.is_hermitian()) {
    throw InvariantError("rotation generator must be Hermitian, got " +
                         step.generator.signed_str());
  }
  const PauliOperator i_gen =
      step.generator.with_phase(step.generator.phase_exp() + 1);
  Hamiltonian out(h.num_qubits(), h.constant());
  if (step.is_clifford()) {
    for (const auto& [p, c] : h.terms()) {
      out.add_term(commutes(step.generator, p) ? p : multiply(i_gen, p), c);
    }
  } else {
    const double cos_a = std::cos(step.angle);
    const double sin_a = std::sin(step.angle);
    for (const auto& [p, c] : h.terms()) {
      if (commutes(step.generator, p)) {
        out.add_term(p, c);
      } else {
        out.add_term(p, c * cos_a);
        out.add_term(multiply(i_gen, p), c * sin_a);
      }
    }
  }
  out.prune();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_dense(std::size_t n, std::size_t dense_limit) {
  if (n > dense_limit) {
    throw ResourceError("dense matrix for " + std::to_string(n) +
                        " qubits exceeds the dense limit of " +
                        std::to_string(dense_limit));
  }
}

// Moves qubit q to bit (n-1-q) so that qubit 0 is the most significant bit of
// the computational-basis index.
std::uint64_t to_basis_order(std::uint64_t bits, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((bits >> q) & 1U) out |= std::uint64_t{1} << (n - 1 - q);
  }
  return out;
}

void accumulate(DenseMatrix& m, const PauliOperator& p,
                std::complex<double> scale) {
  const std::size_t n = p.num_qubits();
  const std::uint64_t x = to_basis_order(p.x_bits(), n);
  const std::uint64_t z = to_basis_order(p.z_bits(), n);
  const int base = p.phase_exp() + std::popcount(p.x_bits() & p.z_bits());
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const int phase = base + 2 * (std::popcount(z & col) & 1);
    m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) +=
        scale * kIPow[phase & 3];
  }
}

}  // namespace

DenseMatrix to_dense_matrix(const PauliOperator& p, std::size_t dense_limit) {
  check_dense(p.num_qubits(), dense_limit);
  const auto dim = Eigen::Index{1} << p.num_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  accumulate(m, p, 1.0);
  return m;
}

DenseMatrix to_dense_matrix(const Hamiltonian& h, std::size_t dense_limit) {
  check_dense(h.num_qubits(), dense_limit);
  const auto dim = Eigen::Index{1} << h.num_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  m.diagonal().setConstant(h.constant());
  for (const auto& [p, c] : h.terms()) accumulate(m, p, c);
  return m;
}

}  // namespace csvqe
