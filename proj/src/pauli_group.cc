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

#include "mubkit/pauli_group.h"

#include <random>
#include <vector>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

int mod(long long x, int d) {
    long long r = x % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

void require_element(int d, const PauliElement &p) {
    if (d < 1) {
        throw ValidationError("dimension must be positive");
    }
    for (int v : {p.phase_a, p.shift_b, p.clock_c}) {
        if (v < 0 || v >= d) {
            throw IndexError("Pauli element component outside Z_" + std::to_string(d));
        }
    }
}

constexpr int kExhaustiveMaxD = 4;
constexpr int kSampledPairs = 10000;
constexpr int kSampledTriples = 10000;

}  // namespace

PauliElement pauli_element(int d, int a, int b, int c) {
    PauliElement p{a, b, c};
    require_element(d, p);
    return p;
}

std::string element_to_string(const PauliElement &p) {
    return "q^" + std::to_string(p.phase_a) + " X^" + std::to_string(p.shift_b) + " Z^" + std::to_string(p.clock_c);
}

OperatorMatrix element_matrix(int d, const PauliElement &p) {
    require_element(d, p);
    // q^a X^b Z^c |k> = q^(a + ck) |k - b>.
    std::vector<CycScalar> entries(static_cast<size_t>(d) * d);
    for (int k = 0; k < d; k++) {
        int row = mod(static_cast<long long>(k) - p.shift_b, d);
        entries[static_cast<size_t>(row) * d + k] = q_power(d, p.phase_a + static_cast<long long>(p.clock_c) * k);
    }
    return OperatorMatrix(d, std::move(entries));
}

PauliElement compose(int d, const PauliElement &p1, const PauliElement &p2) {
    require_element(d, p1);
    require_element(d, p2);
    return {mod(static_cast<long long>(p1.phase_a) + p2.phase_a - static_cast<long long>(p1.clock_c) * p2.shift_b, d),
            mod(p1.shift_b + p2.shift_b, d), mod(p1.clock_c + p2.clock_c, d)};
}

PauliElement inverse(int d, const PauliElement &p) {
    require_element(d, p);
    return {mod(-static_cast<long long>(p.phase_a) - static_cast<long long>(p.shift_b) * p.clock_c, d),
            mod(-p.shift_b, d), mod(-p.clock_c, d)};
}

std::optional<PauliElement> decode_element(int d, const OperatorMatrix &m) {
    if (m.dim() != d) {
        return std::nullopt;
    }
    // Column 0 holds q^a at row -b; column 1 holds q^(a+c) at row 1 - b.
    int row0 = -1;
    for (int r = 0; r < d; r++) {
        if (!m(r, 0).is_zero()) {
            row0 = r;
            break;
        }
    }
    if (row0 < 0) {
        return std::nullopt;
    }
    PauliElement p;
    p.shift_b = mod(-row0, d);
    int a = -1;
    for (int e = 0; e < d; e++) {
        if (m(row0, 0) == q_power(d, e)) {
            a = e;
            break;
        }
    }
    if (a < 0) {
        return std::nullopt;
    }
    p.phase_a = a;
    if (d > 1) {
        const CycScalar &col1 = m(mod(1 - p.shift_b, d), 1);
        int c = -1;
        for (int e = 0; e < d; e++) {
            if (col1 == q_power(d, a + e)) {
                c = e;
                break;
            }
        }
        if (c < 0) {
            return std::nullopt;
        }
        p.clock_c = c;
    }
    if (element_matrix(d, p) != m) {
        return std::nullopt;
    }
    return p;
}

bool GroupReport::passed() const {
    return order == static_cast<long long>(d) * d * d && closure && identity && inverses && associativity &&
           unitary && monomial && faithful && center_contains_phases;
}

GroupReport enumerate_group(int d, int bound) {
    if (d < 2) {
        throw ValidationError("enumerate_group requires d >= 2");
    }
    if (d > bound) {
        throw SizeLimitError("d = " + std::to_string(d) + " exceeds the enumeration bound " + std::to_string(bound));
    }
    GroupReport rep;
    rep.d = d;

    std::vector<PauliElement> elems;
    std::vector<OperatorMatrix> mats;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            for (int c = 0; c < d; c++) {
                elems.push_back({a, b, c});
                mats.push_back(element_matrix(d, elems.back()));
            }
        }
    }
    const size_t n = elems.size();
    auto index_of = [d](const PauliElement &p) {
        return (static_cast<size_t>(p.phase_a) * d + p.shift_b) * d + p.clock_c;
    };

    // Distinct triples must give distinct matrices for the order to be d^3.
    bool distinct = true;
    for (size_t i = 0; i < n && distinct; i++) {
        auto back = decode_element(d, mats[i]);
        distinct = back && *back == elems[i];
    }
    rep.order = distinct ? static_cast<long long>(n) : 0;

    rep.unitary = true;
    rep.monomial = true;
    for (const auto &m : mats) {
        rep.unitary = rep.unitary && m.is_unitary();
        rep.monomial = rep.monomial && m.is_monomial();
    }

    const PauliElement e{0, 0, 0};
    rep.identity = mats[index_of(e)].is_identity();
    for (size_t i = 0; i < n && rep.identity; i++) {
        rep.identity = compose(d, e, elems[i]) == elems[i] && compose(d, elems[i], e) == elems[i];
    }

    rep.inverses = true;
    for (size_t i = 0; i < n && rep.inverses; i++) {
        PauliElement inv = inverse(d, elems[i]);
        rep.inverses = compose(d, elems[i], inv) == e && compose(d, inv, elems[i]) == e &&
                       mats[index_of(inv)] == mats[i].adjoint();
    }

    // Closure at the matrix level: every product decodes to an element.
    // For small d this also compares against compose() for every pair.
    std::mt19937_64 rng(0x5eed2026ULL);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    rep.closure = true;
    rep.faithful = true;
    rep.exhaustive_pairs = d <= kExhaustiveMaxD;
    for (size_t i = 0; i < n && rep.closure; i++) {
        for (size_t j = 0; j < n; j++) {
            OperatorMatrix prod = mats[i] * mats[j];
            auto back = decode_element(d, prod);
            if (!back) {
                rep.closure = false;
                break;
            }
            if (rep.exhaustive_pairs && *back != compose(d, elems[i], elems[j])) {
                rep.faithful = false;
            }
        }
    }
    if (rep.exhaustive_pairs) {
        rep.sampled_pairs = static_cast<long long>(n) * static_cast<long long>(n);
    } else {
        for (int s = 0; s < kSampledPairs; s++) {
            size_t i = pick(rng);
            size_t j = pick(rng);
            if (mats[i] * mats[j] != mats[index_of(compose(d, elems[i], elems[j]))]) {
                rep.faithful = false;
            }
        }
        rep.sampled_pairs = kSampledPairs;
    }

    rep.associativity = true;
    if (d <= kExhaustiveMaxD) {
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                PauliElement ij = compose(d, elems[i], elems[j]);
                for (size_t k = 0; k < n; k++) {
                    if (compose(d, elems[i], compose(d, elems[j], elems[k])) != compose(d, ij, elems[k])) {
                        rep.associativity = false;
                    }
                }
            }
        }
        rep.associativity_triples = static_cast<long long>(n) * n * n;
    } else {
        for (int s = 0; s < kSampledTriples; s++) {
            const auto &x = elems[pick(rng)];
            const auto &y = elems[pick(rng)];
            const auto &z = elems[pick(rng)];
            if (compose(d, x, compose(d, y, z)) != compose(d, compose(d, x, y), z)) {
                rep.associativity = false;
            }
        }
        rep.associativity_triples = kSampledTriples;
    }

    rep.center_contains_phases = true;
    for (int a = 0; a < d && rep.center_contains_phases; a++) {
        const PauliElement phase{a, 0, 0};
        const OperatorMatrix &pm = mats[index_of(phase)];
        for (size_t i = 0; i < n; i++) {
            if (compose(d, phase, elems[i]) != compose(d, elems[i], phase) || pm * mats[i] != mats[i] * pm) {
                rep.center_contains_phases = false;
                break;
            }
        }
    }

    const int order_bound = d % 2 == 0 ? 2 * d : d;
    rep.orders_divide_bound = true;
    for (const auto &m : mats) {
        OperatorMatrix power = m;
        int k = 1;
        while (!power.is_identity() && k <= order_bound) {
            power = power * m;
            k++;
        }
        if (k > order_bound) {
            rep.orders_divide_bound = false;
            continue;
        }
        rep.max_matrix_order = std::max(rep.max_matrix_order, k);
        if (order_bound % k != 0) {
            rep.orders_divide_bound = false;
        }
    }
    return rep;
}

}  // namespace mubkit
