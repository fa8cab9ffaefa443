// Copyright 2026 The mubkit Authors
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

#ifndef MUBKIT_HILBERT_H
#define MUBKIT_HILBERT_H

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/exact_scalar.h"

namespace mubkit {

/// Angular momentum label |j, m>, stored doubled so half-integers are exact.
struct SpinLabel {
    int two_j = 0;
    int two_m = 0;

    friend bool operator==(const SpinLabel &, const SpinLabel &) = default;
};

/// Position k of a state in the computational basis of E(d).
struct QuditIndex {
    int d = 1;
    int k = 0;

    friend bool operator==(const QuditIndex &, const QuditIndex &) = default;
};

/// k = j - m, d = 2j + 1. Throws ValidationError on a parity mismatch or |m| > j.
QuditIndex label_to_k(SpinLabel label);
/// Inverse of label_to_k. Throws IndexError unless 0 <= k < d.
SpinLabel k_to_label(int d, int k);

/// A ket sqrt(scale_sq) * sum_k entries[k] |k>.
///
/// Keeping the normalization as an exact squared rational lets vectors such
/// as (1/sqrt(d)) sum_k q^e |k> stay inside cyclotomic arithmetic.
class StateVector {
   public:
    explicit StateVector(std::vector<CycScalar> entries, Rational scale_sq = 1);

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<CycScalar> &entries() const { return entries_; }
    const CycScalar &operator[](int k) const { return entries_.at(k); }
    const Rational &scale_sq() const { return scale_sq_; }

    /// scale_sq * sum_k |entries[k]|^2, exactly.
    CycScalar norm_squared() const;
    bool is_unit() const;
    /// Multiplies every entry by `factor`, leaving scale_sq unchanged.
    StateVector times(const CycScalar &factor) const;
    std::vector<std::complex<double>> to_complex() const;

    /// Entrywise equality of the physical vectors, independent of how the
    /// normalization is split between scale_sq and the entries.
    friend bool operator==(const StateVector &u, const StateVector &v);
    friend bool operator!=(const StateVector &u, const StateVector &v) { return !(u == v); }

   private:
    std::vector<CycScalar> entries_;
    Rational scale_sq_;
};

/// sqrt(scale_sq) * value.
struct ScaledScalar {
    CycScalar value;
    Rational scale_sq = 1;

    bool is_zero() const { return value.is_zero(); }
    CycScalar magnitude_squared() const { return value.magnitude_squared().scaled(scale_sq); }
    std::optional<Rational> magnitude_squared_rational() const { return magnitude_squared().as_rational(); }
    ScaledScalar conjugate() const { return {value.conjugate(), scale_sq}; }
    std::complex<double> to_complex() const;
};

/// Computational basis vector |k> of E(d).
StateVector ket(int d, int k);

/// <u|v>, antilinear in u. Throws DimensionMismatch.
ScaledScalar inner(const StateVector &u, const StateVector &v);

/// u (x) v with index k * v.dim() + l for u_k v_l (first factor slowest).
StateVector tensor(const StateVector &u, const StateVector &v);

/// c1 u + c2 v for vectors carrying the same scale_sq.
StateVector combine(const CycScalar &c1, const StateVector &u, const CycScalar &c2, const StateVector &v);

/// True when u = c v for some unimodular complex c.
bool equal_up_to_global_phase(const StateVector &u, const StateVector &v);

/// Multiplies by the conjugate phase of the first nonzero entry so that entry
/// becomes real and positive. The entry must be unimodular up to scale_sq
/// (|entry|^2 = 1), which holds for every vector built from roots of unity.
StateVector with_leading_phase_removed(const StateVector &v);

/// Exchanges the factors of a vector in E(d1) (x) E(d2), giving E(d2) (x) E(d1).
StateVector swap_tensor_factors(const StateVector &v, int d1, int d2);

/// An ordered orthonormal set of dim vectors of E(dim).
///
/// Orthonormality is checked exactly on construction; a set that fails the
/// check throws ValidationError.
class Basis {
   public:
    Basis(std::string label, std::vector<StateVector> vectors, std::vector<std::string> tags = {});

    const std::string &label() const { return label_; }
    int dim() const { return dim_; }
    int size() const { return static_cast<int>(vectors_.size()); }
    const std::vector<StateVector> &vectors() const { return vectors_; }
    const StateVector &operator[](int i) const { return vectors_.at(i); }
    /// Optional per-vector annotations (symmetry class, eigenvalue); empty or one per vector.
    const std::vector<std::string> &tags() const { return tags_; }

   private:
    std::string label_;
    int dim_;
    std::vector<StateVector> vectors_;
    std::vector<std::string> tags_;
};

}  // namespace mubkit

#endif  // MUBKIT_HILBERT_H
