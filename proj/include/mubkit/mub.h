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

#ifndef MUBKIT_MUB_H
#define MUBKIT_MUB_H

#include <optional>
#include <string>
#include <vector>

#include "mubkit/exact_scalar.h"
#include "mubkit/hilbert.h"
#include "mubkit/operators.h"

namespace mubkit {

/// |a alpha> = d^(-1/2) sum_k q^((d-k-1)(k+1)a/2 - (k+1)alpha) |k>.
///
/// Exponents are doubled and evaluated as powers of zeta_{2d}, so the half
/// integer powers of q that occur for even d stay exact.
StateVector mub_vector(int d, int a, int alpha);

struct EigenCheck {
    bool passed = false;
    /// The eigenvalue zeta_{2d}^twice_exponent = q^((d-1)a/2 - alpha).
    CycScalar eigenvalue;
    /// (d-1)a - 2 alpha reduced into [0, 2d).
    long long twice_exponent = 0;
};

/// Checks v_{0a} |a alpha> = q^((d-1)a/2 - alpha) |a alpha> exactly.
EigenCheck eigen_check(int d, int a, int alpha);

/// The eigenvalue of v under m, or nullopt if v is not an eigenvector.
std::optional<CycScalar> eigenvalue_of(const OperatorMatrix &m, const StateVector &v);

/// B_{0a} = { |a alpha> : alpha = 0..d-1 }, labelled "B_0a".
Basis basis_B0a(int d, int a);
/// B_d = { |k> }, labelled "B_d".
Basis computational_basis(int d);

enum class Verdict {
    kUnbiased,
    /// Every overlap is 0 or 1: the two bases agree up to order and phases.
    kIdenticalOrthonormal,
    kFailed,
};

const char *verdict_name(Verdict v);

struct OverlapWitness {
    int u = 0;  // vector index in the first basis
    int v = 0;  // vector index in the second basis
    CycScalar overlap_sq;
};

struct PairVerdict {
    int a = 0;  // basis index
    int b = 0;
    Verdict verdict = Verdict::kFailed;
    std::optional<OverlapWitness> witness;
};

/// Exact pairwise unbiasedness verdicts for a list of bases.
struct MubCertificate {
    int dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<PairVerdict> pairs;
    /// dim + 1 bases, all pairwise unbiased.
    bool maximal = false;

    bool all_unbiased() const;
};

/// Compares |<u|v>|^2 with 1/d exactly for every cross pair of vectors.
/// Throws DimensionMismatch when the bases differ in dimension.
MubCertificate certify_unbiased(const std::vector<Basis> &bases);

struct MubSet {
    std::vector<Basis> bases;
    MubCertificate certificate;
    /// Set for composite d: only the three universal bases are returned and
    /// this construction says nothing about how many more exist.
    bool maximal_unknown_by_this_method = false;
};

/// For prime d: B_00 .. B_0(d-1) and B_d (d + 1 bases). Otherwise B_d, B_00
/// and B_01. Requires d >= 2.
MubSet mub_set(int d);

/// Every B_0a together with B_d, certified regardless of whether d is prime.
MubSet b0a_family(int d);

bool is_prime(int n);

/// Matrix of w_ab = v_0a (x) v_0b on E(2) (x) E(2).
OperatorMatrix w_matrix(int a, int b);

struct TwoQubitMubs {
    /// canonical, w_00, w_11, w_01, w_10.
    std::vector<Basis> bases;
    MubCertificate certificate;
    /// Eigenvalue of each vector under its w_ab; empty for the canonical basis.
    std::vector<std::vector<CycScalar>> eigenvalues;
};

/// Five mutually unbiased bases of E(2) (x) E(2) built from eigenvectors of
/// w_ab. The entangled w_01 and w_10 bases are the lambda / mu combinations
/// with lambda = (1 - i)/2 and mu = (1 + i)/2.
TwoQubitMubs two_qubit_mub_set();

/// {aa, (ab + ba)/sqrt2, bb, (ab - ba)/sqrt2}: the J = 1 triplet followed by
/// the J = 0 singlet, tagged accordingly.
Basis su2_adapted_basis();

}  // namespace mubkit

#endif  // MUBKIT_MUB_H
