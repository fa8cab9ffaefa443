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

#ifndef MUBKIT_PAULI_GROUP_H
#define MUBKIT_PAULI_GROUP_H

#include <optional>
#include <string>

#include "mubkit/operators.h"

namespace mubkit {

/// The element q^a X^b Z^c of the generalized Pauli group P_d.
struct PauliElement {
    int phase_a = 0;
    int shift_b = 0;
    int clock_c = 0;

    friend bool operator==(const PauliElement &, const PauliElement &) = default;
};

/// Builds an element, checking every component lies in Z_d. Throws IndexError.
PauliElement pauli_element(int d, int a, int b, int c);

/// "q^a X^b Z^c".
std::string element_to_string(const PauliElement &p);

/// q^a X^b Z^c as an exact d x d matrix.
OperatorMatrix element_matrix(int d, const PauliElement &p);

/// Symbolic product, from Z^c X^b = q^(-bc) X^b Z^c:
/// (a1 + a2 - c1 b2, b1 + b2, c1 + c2) mod d.
PauliElement compose(int d, const PauliElement &p1, const PauliElement &p2);

/// (-a - bc, -b, -c) mod d.
PauliElement inverse(int d, const PauliElement &p);

/// Reads back the element whose matrix is m, or nullopt if m is not one.
std::optional<PauliElement> decode_element(int d, const OperatorMatrix &m);

struct GroupReport {
    int d = 0;
    long long order = 0;
    bool closure = false;
    bool identity = false;
    bool inverses = false;
    bool associativity = false;
    long long associativity_triples = 0;
    bool unitary = false;
    bool monomial = false;
    /// compose() agrees with matrix multiplication on every checked pair.
    bool faithful = false;
    long long sampled_pairs = 0;
    bool exhaustive_pairs = false;
    bool center_contains_phases = false;
    /// Largest multiplicative order of an element matrix, and whether every
    /// order divides d (odd d) or 2d (even d). Recorded, not required.
    int max_matrix_order = 0;
    bool orders_divide_bound = false;

    bool passed() const;
};

/// Enumerates all d^3 elements and verifies the group axioms, unitarity and
/// agreement between compose() and matrix products (all pairs for d <= 4,
/// 10^4 seeded random pairs above). Requires 2 <= d <= bound; a larger d
/// throws SizeLimitError.
GroupReport enumerate_group(int d, int bound = 7);

}  // namespace mubkit

#endif  // MUBKIT_PAULI_GROUP_H
