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

#include "mubkit/serialize.h"

#include "mubkit/errors.h"

namespace mubkit {

namespace {

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::string string_field(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_string()) {
        throw ParseError(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

Json to_json(const CycScalar &x) { return x.to_string(); }

Json to_json(const StateVector &v) {
    Json entries = Json::array();
    for (const auto &e : v.entries()) {
        entries.push_back(e.to_string());
    }
    Json j;
    j["dim"] = v.dim();
    j["scale_sq"] = rational_to_string(v.scale_sq());
    j["entries"] = std::move(entries);
    return j;
}

StateVector state_from_json(const Json &j) {
    const Json &dim = field(j, "dim");
    if (!dim.is_number_integer()) {
        throw ParseError("field 'dim' must be an integer");
    }
    const Json &entries = field(j, "entries");
    if (!entries.is_array()) {
        throw ParseError("field 'entries' must be an array");
    }
    std::vector<CycScalar> values;
    for (const auto &e : entries) {
        if (!e.is_string()) {
            throw ParseError("state entries must be scalar strings");
        }
        values.push_back(CycScalar::parse(e.get<std::string>()));
    }
    if (static_cast<long long>(values.size()) != dim.get<long long>()) {
        throw ParseError("entry count does not match 'dim'");
    }
    Rational scale = parse_rational(string_field(j, "scale_sq"));
    if (sgn(scale) <= 0) {
        throw ParseError("scale_sq must be positive");
    }
    return StateVector(std::move(values), scale);
}

Json to_json(const Basis &b) {
    Json vectors = Json::array();
    for (const auto &v : b.vectors()) {
        vectors.push_back(to_json(v));
    }
    Json j;
    j["label"] = b.label();
    j["dim"] = b.dim();
    j["vectors"] = std::move(vectors);
    if (!b.tags().empty()) {
        j["tags"] = b.tags();
    }
    return j;
}

Basis basis_from_json(const Json &j) {
    std::string label = string_field(j, "label");
    const Json &vectors = field(j, "vectors");
    if (!vectors.is_array()) {
        throw ParseError("field 'vectors' must be an array");
    }
    std::vector<StateVector> vs;
    for (const auto &v : vectors) {
        vs.push_back(state_from_json(v));
    }
    std::vector<std::string> tags;
    if (j.contains("tags")) {
        for (const auto &t : j.at("tags")) {
            if (!t.is_string()) {
                throw ParseError("basis tags must be strings");
            }
            tags.push_back(t.get<std::string>());
        }
    }
    return Basis(std::move(label), std::move(vs), std::move(tags));
}

Json to_json(const OperatorMatrix &m) {
    Json rows = Json::array();
    for (int r = 0; r < m.dim(); r++) {
        Json row = Json::array();
        for (int c = 0; c < m.dim(); c++) {
            row.push_back(m(r, c).to_string());
        }
        rows.push_back(std::move(row));
    }
    Json j;
    j["dim"] = m.dim();
    j["entries"] = std::move(rows);
    return j;
}

Json to_json(const RadicalDiagonal &h) {
    Json j;
    j["dim"] = h.dim;
    j["radicands"] = h.radicands;
    return j;
}

Json to_json(const CheckResult &c) {
    Json j;
    j["check"] = c.check;
    j["exact"] = c.exact;
    j["passed"] = c.passed;
    if (c.max_residual) {
        j["max_residual"] = *c.max_residual;
    } else {
        j["max_residual"] = nullptr;
    }
    return j;
}

Json to_json(const VerificationReport &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back(to_json(c));
    }
    Json j;
    j["subject"] = r.subject;
    j["d"] = r.dim;
    j["passed"] = r.passed();
    j["checks"] = std::move(checks);
    return j;
}

Json to_json(const Su2Report &r) {
    Json j = to_json(r.report);
    j["a"] = r.a;
    j["tolerance"] = r.tolerance;
    Json jz = Json::array();
    for (const auto &x : r.jz_diagonal) {
        jz.push_back(rational_to_string(x));
    }
    j["jz_diagonal"] = std::move(jz);
    return j;
}

Json to_json(const MubCertificate &c) {
    Json pairs = Json::array();
    for (const auto &p : c.pairs) {
        Json pj;
        pj["a"] = p.a;
        pj["b"] = p.b;
        pj["verdict"] = verdict_name(p.verdict);
        if (p.witness) {
            Json w;
            w["u"] = p.witness->u;
            w["v"] = p.witness->v;
            auto r = p.witness->overlap_sq.as_rational();
            w["overlap_sq"] = r ? rational_to_string(*r) : p.witness->overlap_sq.to_string();
            pj["witness"] = std::move(w);
        }
        pairs.push_back(std::move(pj));
    }
    Json j;
    j["dim"] = c.dim;
    j["bases"] = c.basis_labels;
    j["maximal"] = c.maximal;
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const MubSet &s) {
    Json bases = Json::array();
    for (const auto &b : s.bases) {
        bases.push_back(to_json(b));
    }
    Json j;
    j["dim"] = s.certificate.dim;
    j["bases"] = std::move(bases);
    j["certificate"] = to_json(s.certificate);
    j["maximal_unknown_by_this_method"] = s.maximal_unknown_by_this_method;
    return j;
}

Json to_json(const TwoQubitMubs &t) {
    Json bases = Json::array();
    for (size_t i = 0; i < t.bases.size(); i++) {
        Json b = to_json(t.bases[i]);
        if (!t.eigenvalues[i].empty()) {
            Json eig = Json::array();
            for (const auto &e : t.eigenvalues[i]) {
                eig.push_back(e.to_string());
            }
            b["eigenvalues"] = std::move(eig);
        }
        bases.push_back(std::move(b));
    }
    Json j;
    j["dim"] = 4;
    j["bases"] = std::move(bases);
    j["certificate"] = to_json(t.certificate);
    return j;
}

Json to_json(const GroupReport &r) {
    Json j;
    j["d"] = r.d;
    j["order"] = r.order;
    j["closure"] = r.closure;
    j["faithful"] = r.faithful;
    j["sampled_pairs"] = r.sampled_pairs;
    j["exhaustive_pairs"] = r.exhaustive_pairs;
    j["identity"] = r.identity;
    j["inverses"] = r.inverses;
    j["associativity"] = r.associativity;
    j["associativity_triples"] = r.associativity_triples;
    j["unitary"] = r.unitary;
    j["monomial"] = r.monomial;
    j["center_contains_phases"] = r.center_contains_phases;
    j["max_matrix_order"] = r.max_matrix_order;
    j["orders_divide_bound"] = r.orders_divide_bound;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const TangleResult &t) {
    Json j;
    if (t.det_abs_sq) {
        j["det_abs_sq"] = rational_to_string(*t.det_abs_sq);
    } else {
        j["det_abs_sq"] = nullptr;
    }
    j["det_abs_float"] = t.det_abs_float;
    j["class"] = tangle_class_name(t.classification);
    return j;
}

Json to_json(const BasisClassification &c) {
    Json vectors = Json::array();
    for (const auto &t : c.vectors) {
        vectors.push_back(to_json(t));
    }
    Json j;
    j["label"] = c.label;
    j["vectors"] = std::move(vectors);
    j["summary"] = c.summary;
    return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace mubkit
