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

// Human readable rendering in q-notation, q = exp(2 pi i / d).

#ifndef MUBKIT_RENDER_H
#define MUBKIT_RENDER_H

#include <string>

#include "mubkit/entanglement.h"
#include "mubkit/mub.h"
#include "mubkit/operators.h"
#include "mubkit/pauli_group.h"

namespace mubkit {

/// "# q = exp(2*pi*i/d)"
std::string q_header(int d);

/// Exact symbolic form: "0", "-1/2", "i", "q^2", "-q^(1/2)", or a sum of such
/// terms when the value is not a single root of unity times a rational.
std::string render_scalar(const CycScalar &x, int d);

/// sqrt(scale_sq) as text: "" for 1, "1/2", "1/√3", "√(2/3)".
std::string render_scale(const Rational &scale_sq);

/// e.g. "1/√3 (q^2, q, 1)".
std::string render_state(const StateVector &v, int d);

std::string render_basis(const Basis &b, int d);
std::string render_matrix(const OperatorMatrix &m, int d);
std::string render_report(const VerificationReport &r);
std::string render_certificate(const MubCertificate &c);
std::string render_group_report(const GroupReport &r);
std::string render_classification(const BasisClassification &c);
std::string render_tangle(const TangleResult &t);

}  // namespace mubkit

#endif  // MUBKIT_RENDER_H
