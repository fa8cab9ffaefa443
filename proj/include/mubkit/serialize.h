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

// JSON forms of every value the library produces. Keys keep insertion order
// and scalars use their canonical strings, so equal values always serialize
// to identical bytes.

#ifndef MUBKIT_SERIALIZE_H
#define MUBKIT_SERIALIZE_H

#include <json.hpp>

#include "mubkit/entanglement.h"
#include "mubkit/exact_scalar.h"
#include "mubkit/hilbert.h"
#include "mubkit/mub.h"
#include "mubkit/operators.h"
#include "mubkit/pauli_group.h"

namespace mubkit {

using Json = nlohmann::ordered_json;

Json to_json(const CycScalar &x);

/// {dim, scale_sq: "p/q", entries: [scalar strings]}
Json to_json(const StateVector &v);
/// Throws ParseError on a malformed document.
StateVector state_from_json(const Json &j);

/// {label, dim, vectors: [...], tags?: [...]}
Json to_json(const Basis &b);
Basis basis_from_json(const Json &j);

/// {dim, entries: [[row 0], [row 1], ...]}
Json to_json(const OperatorMatrix &m);
Json to_json(const RadicalDiagonal &h);

/// {check, exact, passed, max_residual}
Json to_json(const CheckResult &c);
Json to_json(const VerificationReport &r);
Json to_json(const Su2Report &r);

/// {dim, bases: [labels], maximal, pairs: [{a, b, verdict, witness?}]}
Json to_json(const MubCertificate &c);
Json to_json(const MubSet &s);
Json to_json(const TwoQubitMubs &t);

/// {d, order, closure, faithful, sampled_pairs, ...}
Json to_json(const GroupReport &r);

/// {det_abs_sq: "p/q" | null, det_abs_float, class}
Json to_json(const TangleResult &t);
Json to_json(const BasisClassification &c);

/// Serializes with two-space indentation and a trailing newline.
std::string dump(const Json &j);

}  // namespace mubkit

#endif  // MUBKIT_SERIALIZE_H
