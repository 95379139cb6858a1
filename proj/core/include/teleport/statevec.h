// Copyright 2026 The Teleport Audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace teleport {

using Amplitude = std::complex<double>;

/// Qubit labels are small integers that follow the particle numbering of the
/// protocols (1, 2, 3, ...).
using Label = int;
using Labels = std::vector<Label>;

/// Raised for unknown, duplicated or overlapping qubit labels.
class LabelError : public std::invalid_argument {
 public:
  explicit LabelError(const std::string &message) : std::invalid_argument(message) {}
};

/// Raised for non-unitary gates and malformed amplitude vectors.
class StateError : public std::invalid_argument {
 public:
  explicit StateError(const std::string &message) : std::invalid_argument(message) {}
};

/// Raised for bases that are not orthonormal or do not match the measured arity.
class BasisError : public std::invalid_argument {
 public:
  explicit BasisError(const std::string &message) : std::invalid_argument(message) {}
};

/// A stored state drifted away from unit norm. Signals an internal bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string &message) : std::logic_error(message) {}
};

/// Pure state over an ordered list of labelled qubits.
///
/// The amplitude at index i belongs to the basis state whose bits, read from
/// the most significant end, are the values of labels()[0], labels()[1], ...
/// A state over zero qubits holds a single amplitude of modulus one.
class PureState {
 public:
  /// The zero-qubit state (a single amplitude 1).
  PureState() : amps_{Amplitude{1.0}} {}

  /// Validates distinct labels, length 2^n, finite entries and unit norm.
  PureState(Labels labels, std::vector<Amplitude> amplitudes);

  /// Same checks except the norm: the vector is rescaled to unit length.
  static PureState normalized(Labels labels, std::vector<Amplitude> amplitudes);

  /// |bits> over the given labels; bits is a string of '0'/'1'.
  static PureState basis(Labels labels, std::string_view bits);

  const Labels &labels() const { return labels_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude &operator[](std::size_t index) const { return amps_[index]; }
  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t dimension() const { return amps_.size(); }

  bool has_label(Label label) const;
  /// Position of label inside labels(); throws LabelError if absent.
  std::size_t position(Label label) const;
  double norm() const;

  /// Same state with qubits permuted into the given order.
  PureState reordered(const Labels &order) const;

  bool operator==(const PureState &other) const = default;

 private:
  Labels labels_;
  std::vector<Amplitude> amps_;
};

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Amplitude, 4>;

namespace gates {
extern const Matrix2 I;
extern const Matrix2 X;
extern const Matrix2 Y;
extern const Matrix2 Z;
extern const Matrix2 H;
extern const Matrix2 S;

/// Looks up one of I, X, Y, Z, H, S. Throws StateError for other names.
const Matrix2 &by_name(std::string_view name);
bool is_known(std::string_view name);
}  // namespace gates

bool is_unitary(const Matrix2 &u, double tolerance);

/// One named vector of a measurement basis.
struct BasisVector {
  std::string label;
  std::vector<Amplitude> vector;

  bool operator==(const BasisVector &) const = default;
};

/// Orthonormal, complete basis of a 2^arity dimensional space.
class MeasurementBasis {
 public:
  /// Throws BasisError unless the vectors are orthonormal and complete.
  MeasurementBasis(std::string name, std::size_t arity, std::vector<BasisVector> vectors);

  static MeasurementBasis computational(std::size_t arity);
  /// Phi+, Phi-, Psi+, Psi- in that order.
  static MeasurementBasis bell();
  /// |++>, |-+>, |-->, |+-> in that order, labelled "++", "-+", "--", "+-".
  static MeasurementBasis plus_minus();

  /// "computational" (any arity), "bell" or "pm" (arity 2).
  static MeasurementBasis by_name(std::string_view name, std::size_t arity);
  static bool is_known(std::string_view name);

  const std::string &name() const { return name_; }
  std::size_t arity() const { return arity_; }
  const std::vector<BasisVector> &vectors() const { return vectors_; }

 private:
  std::string name_;
  std::size_t arity_;
  std::vector<BasisVector> vectors_;
};

/// One outcome of a projective measurement.
struct Branch {
  std::string outcome;
  double probability;
  /// Renormalized projection over the unmeasured labels, in their original order.
  PureState post_state;
};

/// Kronecker product; a's labels come first. Throws LabelError on overlap.
PureState tensor(const PureState &a, const PureState &b);

/// Applies u to one qubit. Throws LabelError or StateError (non-unitary u).
PureState apply_1q(const PureState &s, Label label, const Matrix2 &u);

PureState apply_cnot(const PureState &s, Label control, Label target);

/// Projects the given labels onto every basis vector.
///
/// Returns one branch per basis vector whose probability is at least
/// kPruneThreshold, in basis order. Measured labels are removed from the
/// post-measurement register; the projection is only rescaled, never rephased.
std::vector<Branch> measure(const PureState &s, const Labels &labels, const MeasurementBasis &basis);

/// <a|b> after reordering b into a's label order.
Amplitude inner_product(const PureState &a, const PureState &b);

/// |<a|b>|^2. Throws LabelError unless both states cover the same label set.
double fidelity(const PureState &a, const PureState &b);

}  // namespace teleport
