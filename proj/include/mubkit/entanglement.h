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

#ifndef MUBKIT_ENTANGLEMENT_H
#define MUBKIT_ENTANGLEMENT_H

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mubkit/hilbert.h"
#include "mubkit/operators.h"

namespace mubkit {

/// A = (a_kl) for |Phi> = sum_kl a_kl |k> (x) |l>, as numerators times
/// sqrt(scale_sq).
struct CoefficientMatrix {
    int factor_dim = 0;
    OperatorMatrix numerators{1};
    Rational scale_sq = 1;
};

/// Reshapes a unit vector of E(d) (x) E(d): A[k][l] = entry k * d + l.
/// Throws DimensionMismatch if dim != d^2, ValidationError if not unit norm.
CoefficientMatrix coefficient_matrix(const StateVector &state, int d);

/// Exact determinant by Laplace expansion over column subsets (O(2^n n)
/// products, no division).
CycScalar exact_determinant(const OperatorMatrix &m);

/// |det| of a row-major n x n complex matrix via pivoted LU.
double determinant_abs(std::span<const std::complex<double>> row_major, int n);

/// Classification by |det A|, which lies in [0, d^(-d/2)].
///
/// kNone means det A = 0: no *global* entanglement in this determinant sense.
/// For d > 2 that does not imply a product state.
enum class TangleClass { kNone, kMaximal, kIntermediate };

const char *tangle_class_name(TangleClass c);

struct TangleResult {
    /// det A = sqrt(det_scale_sq) * det_numerator.
    CycScalar det_numerator;
    Rational det_scale_sq = 1;
    /// |det A|^2 when it is rational, which covers every state built here.
    std::optional<Rational> det_abs_sq;
    double det_abs_float = 0;
    TangleClass classification = TangleClass::kNone;
};

/// Computes det A exactly and classifies it. A value above the d^(-d) bound
/// throws InternalError, since it can only come from an arithmetic bug.
TangleResult global_tangle(const StateVector &state, int d);

struct BasisClassification {
    std::string label;
    std::vector<TangleResult> vectors;
    /// "all-none", "all-maximal" or "mixed".
    std::string summary;
};

BasisClassification classify_basis(const Basis &basis, int d);

}  // namespace mubkit

#endif  // MUBKIT_ENTANGLEMENT_H
