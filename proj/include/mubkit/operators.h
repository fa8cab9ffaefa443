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

#ifndef MUBKIT_OPERATORS_H
#define MUBKIT_OPERATORS_H

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/exact_scalar.h"
#include "mubkit/hilbert.h"

namespace mubkit {

/// q^e for q = exp(2 pi i / d), expressed with conductor 2d.
CycScalar q_power(int d, long long e);
/// q^(e/2) = zeta_{2d}^e. Half-integer powers of q appear in the |a alpha>
/// eigenvectors when d is even.
CycScalar half_q_power(int d, long long twice_e);

/// Dense d x d matrix of exact scalars. Column c is the image of |c>, so
/// entry (r, c) = <r|M|c>.
class OperatorMatrix {
   public:
    /// The zero matrix.
    explicit OperatorMatrix(int dim);
    OperatorMatrix(int dim, std::vector<CycScalar> row_major);

    static OperatorMatrix identity(int dim);
    static OperatorMatrix diagonal(std::vector<CycScalar> diag);

    int dim() const { return dim_; }
    const CycScalar &operator()(int row, int col) const { return entries_[static_cast<size_t>(row) * dim_ + col]; }
    const std::vector<CycScalar> &entries() const { return entries_; }

    OperatorMatrix adjoint() const;
    /// M^e for e >= 0, by repeated squaring.
    OperatorMatrix power(int e) const;
    OperatorMatrix scaled(const CycScalar &factor) const;
    /// Transforms the entries of v; scale_sq is carried over unchanged.
    StateVector apply(const StateVector &v) const;

    bool is_identity() const;
    bool is_unitary() const;
    /// Exactly one nonzero entry in every row and column.
    bool is_monomial() const;
    /// Row-major complex approximation.
    std::vector<std::complex<double>> to_complex() const;

    friend OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b);
    friend bool operator==(const OperatorMatrix &a, const OperatorMatrix &b);
    friend bool operator!=(const OperatorMatrix &a, const OperatorMatrix &b) { return !(a == b); }

   private:
    int dim_;
    std::vector<CycScalar> entries_;
};

/// Kronecker product; row index r1 * b.dim() + r2, matching tensor().
OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b);

/// Matrix of v_{0a}: v_{0a}|k> = q^(ka) |k-1 mod d>.
OperatorMatrix v0a_matrix(int d, int a);
/// Shift operator X = V_{00}.
OperatorMatrix x_matrix(int d);
/// Clock operator Z = diag(1, q, ..., q^(d-1)).
OperatorMatrix z_matrix(int d);

/// diag(sqrt(n_0), ..., sqrt(n_{d-1})) with integer radicands.
struct RadicalDiagonal {
    int dim = 1;
    std::vector<long long> radicands;

    /// The exact integer diagonal diag(n_k).
    OperatorMatrix squared() const;
    std::vector<double> values() const;
};

/// The Hermitian factor h with h|k> = sqrt((d-1-k)(k+1)) |k>.
RadicalDiagonal h_diagonal(int d);

struct CheckResult {
    std::string check;
    bool exact = true;
    bool passed = false;
    /// Largest entrywise deviation for floating point checks.
    std::optional<double> max_residual;
    /// Human readable context, e.g. the parameters of the first failure.
    std::string detail;
};

struct VerificationReport {
    std::string subject;
    int dim = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Verifies the Weyl pair relations in E(d): v_{0a} = X Z^a, X^d = Z^d = 1,
/// XZ = qZX, v_{0a} Z = q Z v_{0a}, (-1)^((d-1)a) (V_{0a})^d = 1 for all a,
/// plus unitarity and the spectrum of Z. Failures are reported, not thrown.
VerificationReport weyl_report(int d);

struct Su2Report {
    VerificationReport report;
    int a = 0;
    double tolerance = 0;
    /// Exact eigenvalues of j_z on |k>, k = 0..d-1.
    std::vector<Rational> jz_diagonal;
};

/// Checks the polar decomposition j+ = h v_{0a}, j- = v_{0a}^dag h,
/// j_z = (h^2 - v_{0a}^dag h^2 v_{0a}) / 2. The [j+, j-] = 2 j_z identity is
/// checked exactly through h^2; the commutators with j_z use floating point.
Su2Report su2_report(int d, int a, double tolerance = 1e-12);

}  // namespace mubkit

#endif  // MUBKIT_OPERATORS_H
