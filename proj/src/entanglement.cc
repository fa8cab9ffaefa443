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

#include "mubkit/entanglement.h"

#include <bit>
#include <cmath>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

constexpr int kMaxExactDeterminant = 16;

Rational pow_rational(const Rational &base, int e) {
    Rational out(1);
    for (int i = 0; i < e; i++) {
        out *= base;
    }
    return out;
}

}  // namespace

CoefficientMatrix coefficient_matrix(const StateVector &state, int d) {
    if (d < 1 || state.dim() != d * d) {
        throw DimensionMismatch("state of dim " + std::to_string(state.dim()) + " is not in E(" +
                                std::to_string(d) + ") (x) E(" + std::to_string(d) + ")");
    }
    if (!state.is_unit()) {
        throw ValidationError("coefficient matrix requires a unit vector");
    }
    return {d, OperatorMatrix(d, state.entries()), state.scale_sq()};
}

CycScalar exact_determinant(const OperatorMatrix &m) {
    const int n = m.dim();
    if (n > kMaxExactDeterminant) {
        throw SizeLimitError("exact determinant limited to n <= 16");
    }
    // dp[mask]: signed sum over assignments of rows 0..popcount(mask)-1 to
    // the columns in mask.
    std::vector<CycScalar> dp(size_t{1} << n);
    dp[0] = CycScalar(1L);
    for (unsigned mask = 0; mask < (1u << n); mask++) {
        if (dp[mask].is_zero()) {
            continue;
        }
        int row = std::popcount(mask);
        if (row == n) {
            continue;
        }
        for (int c = 0; c < n; c++) {
            if (mask & (1u << c)) {
                continue;
            }
            const CycScalar &x = m(row, c);
            if (x.is_zero()) {
                continue;
            }
            // Rows already placed in columns right of c form inversions with this one.
            int inversions = std::popcount(mask >> (c + 1));
            CycScalar term = dp[mask] * x;
            if (inversions % 2) {
                dp[mask | (1u << c)] -= term;
            } else {
                dp[mask | (1u << c)] += term;
            }
        }
    }
    return dp[(size_t{1} << n) - 1];
}

double determinant_abs(std::span<const std::complex<double>> row_major, int n) {
    if (n < 0 || row_major.size() != static_cast<size_t>(n) * n) {
        throw DimensionMismatch("determinant needs an n x n matrix");
    }
    std::vector<std::complex<double>> a(row_major.begin(), row_major.end());
    double result = 1;
    for (int col = 0; col < n; col++) {
        int pivot = col;
        for (int r = col + 1; r < n; r++) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (a[pivot * n + col] == 0.0) {
            return 0;
        }
        if (pivot != col) {
            for (int c = 0; c < n; c++) {
                std::swap(a[col * n + c], a[pivot * n + c]);
            }
        }
        const auto p = a[col * n + col];
        result *= std::abs(p);
        for (int r = col + 1; r < n; r++) {
            auto f = a[r * n + col] / p;
            for (int c = col; c < n; c++) {
                a[r * n + c] -= f * a[col * n + c];
            }
        }
    }
    return result;
}

const char *tangle_class_name(TangleClass c) {
    switch (c) {
        case TangleClass::kNone:
            return "none";
        case TangleClass::kMaximal:
            return "maximal";
        case TangleClass::kIntermediate:
            return "intermediate";
    }
    return "intermediate";
}

TangleResult global_tangle(const StateVector &state, int d) {
    CoefficientMatrix a = coefficient_matrix(state, d);
    TangleResult out;
    out.det_numerator = exact_determinant(a.numerators);
    out.det_scale_sq = pow_rational(a.scale_sq, d);
    out.det_abs_sq = out.det_numerator.magnitude_squared().scaled(out.det_scale_sq).as_rational();
    out.det_abs_float = std::sqrt(out.det_scale_sq.get_d()) * std::abs(out.det_numerator.to_complex());

    const Rational bound = pow_rational(Rational(1, d), d);
    if (out.det_numerator.is_zero()) {
        out.classification = TangleClass::kNone;
        return out;
    }
    if (out.det_abs_sq) {
        if (*out.det_abs_sq > bound) {
            throw InternalError("|det A|^2 = " + rational_to_string(*out.det_abs_sq) + " exceeds d^-d");
        }
        out.classification = *out.det_abs_sq == bound ? TangleClass::kMaximal : TangleClass::kIntermediate;
    } else {
        // An irrational |det A|^2 cannot equal the rational bound.
        if (out.det_abs_float * out.det_abs_float > bound.get_d() * (1 + 1e-12)) {
            throw InternalError("|det A|^2 exceeds d^-d");
        }
        out.classification = TangleClass::kIntermediate;
    }
    return out;
}

BasisClassification classify_basis(const Basis &basis, int d) {
    if (basis.dim() != d * d) {
        throw DimensionMismatch("basis '" + basis.label() + "' is not in E(" + std::to_string(d) + ") (x) E(" +
                                std::to_string(d) + ")");
    }
    BasisClassification out;
    out.label = basis.label();
    bool all_none = true;
    bool all_max = true;
    for (const auto &v : basis.vectors()) {
        out.vectors.push_back(global_tangle(v, d));
        all_none = all_none && out.vectors.back().classification == TangleClass::kNone;
        all_max = all_max && out.vectors.back().classification == TangleClass::kMaximal;
    }
    out.summary = all_none ? "all-none" : all_max ? "all-maximal" : "mixed";
    return out;
}

}  // namespace mubkit
