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

#include "mubkit/operators.h"

#include <algorithm>
#include <cmath>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

void require_dim(int d) {
    if (d < 1) {
        throw ValidationError("dimension must be positive");
    }
}

void require_label(int d, int a, const char *name) {
    require_dim(d);
    if (a < 0 || a >= d) {
        throw IndexError(std::string(name) + " = " + std::to_string(a) + " outside Z_" + std::to_string(d));
    }
}

// Small dense complex matrix, used only for the commutators involving sqrt(n).
struct FloatMatrix {
    int n;
    std::vector<std::complex<double>> m;

    explicit FloatMatrix(int dim) : n(dim), m(static_cast<size_t>(dim) * dim) {}
    std::complex<double> &at(int r, int c) { return m[static_cast<size_t>(r) * n + c]; }
    std::complex<double> at(int r, int c) const { return m[static_cast<size_t>(r) * n + c]; }
};

FloatMatrix float_mul(const FloatMatrix &a, const FloatMatrix &b) {
    FloatMatrix out(a.n);
    for (int i = 0; i < a.n; i++) {
        for (int k = 0; k < a.n; k++) {
            auto x = a.at(i, k);
            if (x == 0.0) {
                continue;
            }
            for (int j = 0; j < a.n; j++) {
                out.at(i, j) += x * b.at(k, j);
            }
        }
    }
    return out;
}

FloatMatrix float_adjoint(const FloatMatrix &a) {
    FloatMatrix out(a.n);
    for (int i = 0; i < a.n; i++) {
        for (int j = 0; j < a.n; j++) {
            out.at(j, i) = std::conj(a.at(i, j));
        }
    }
    return out;
}

// max |(xy - yx) - sign * target| entrywise.
double commutator_residual(const FloatMatrix &x, const FloatMatrix &y, const FloatMatrix &target, double factor) {
    FloatMatrix xy = float_mul(x, y);
    FloatMatrix yx = float_mul(y, x);
    double worst = 0;
    for (size_t i = 0; i < xy.m.size(); i++) {
        worst = std::max(worst, std::abs(xy.m[i] - yx.m[i] - factor * target.m[i]));
    }
    return worst;
}

FloatMatrix to_float(const OperatorMatrix &a) {
    FloatMatrix out(a.dim());
    out.m = a.to_complex();
    return out;
}

}  // namespace

CycScalar q_power(int d, long long e) { return CycScalar::root_of_unity(2 * d, 2 * (e % d)); }

CycScalar half_q_power(int d, long long twice_e) { return CycScalar::root_of_unity(2 * d, twice_e); }

OperatorMatrix::OperatorMatrix(int dim) : dim_(dim) {
    require_dim(dim);
    entries_.resize(static_cast<size_t>(dim) * dim);
}

OperatorMatrix::OperatorMatrix(int dim, std::vector<CycScalar> row_major) : dim_(dim), entries_(std::move(row_major)) {
    require_dim(dim);
    if (entries_.size() != static_cast<size_t>(dim) * dim) {
        throw DimensionMismatch("matrix needs dim^2 entries");
    }
}

OperatorMatrix OperatorMatrix::identity(int dim) {
    OperatorMatrix out(dim);
    for (int i = 0; i < dim; i++) {
        out.entries_[static_cast<size_t>(i) * dim + i] = CycScalar(1L);
    }
    return out;
}

OperatorMatrix OperatorMatrix::diagonal(std::vector<CycScalar> diag) {
    int dim = static_cast<int>(diag.size());
    OperatorMatrix out(dim);
    for (int i = 0; i < dim; i++) {
        out.entries_[static_cast<size_t>(i) * dim + i] = std::move(diag[i]);
    }
    return out;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            const CycScalar &v = (*this)(r, c);
            if (!v.is_zero()) {
                out.entries_[static_cast<size_t>(c) * dim_ + r] = v.conjugate();
            }
        }
    }
    return out;
}

OperatorMatrix OperatorMatrix::power(int e) const {
    if (e < 0) {
        throw std::invalid_argument("matrix power requires e >= 0");
    }
    OperatorMatrix result = identity(dim_);
    OperatorMatrix base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

OperatorMatrix OperatorMatrix::scaled(const CycScalar &factor) const {
    std::vector<CycScalar> out;
    out.reserve(entries_.size());
    for (const auto &v : entries_) {
        out.push_back(v.is_zero() ? v : v * factor);
    }
    return OperatorMatrix(dim_, std::move(out));
}

StateVector OperatorMatrix::apply(const StateVector &v) const {
    if (v.dim() != dim_) {
        throw DimensionMismatch("operator of dim " + std::to_string(dim_) + " applied to vector of dim " +
                                std::to_string(v.dim()));
    }
    std::vector<CycScalar> out(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            const CycScalar &m = (*this)(r, c);
            const CycScalar &x = v.entries()[c];
            if (!m.is_zero() && !x.is_zero()) {
                out[r] += m * x;
            }
        }
    }
    return StateVector(std::move(out), v.scale_sq());
}

bool OperatorMatrix::is_identity() const {
    const CycScalar one(1L);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            const CycScalar &v = (*this)(r, c);
            if (r == c ? v != one : !v.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool OperatorMatrix::is_unitary() const { return (adjoint() * *this).is_identity(); }

bool OperatorMatrix::is_monomial() const {
    std::vector<int> col_count(dim_, 0);
    for (int r = 0; r < dim_; r++) {
        int row_count = 0;
        for (int c = 0; c < dim_; c++) {
            if (!(*this)(r, c).is_zero()) {
                row_count++;
                col_count[c]++;
            }
        }
        if (row_count != 1) {
            return false;
        }
    }
    return std::all_of(col_count.begin(), col_count.end(), [](int n) { return n == 1; });
}

std::vector<std::complex<double>> OperatorMatrix::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(entries_.size());
    for (const auto &v : entries_) {
        out.push_back(v.is_zero() ? std::complex<double>{} : v.to_complex());
    }
    return out;
}

OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionMismatch("matrix product of mismatched dimensions");
    }
    const int n = a.dim_;
    OperatorMatrix out(n);
    for (int i = 0; i < n; i++) {
        for (int k = 0; k < n; k++) {
            const CycScalar &x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (int j = 0; j < n; j++) {
                const CycScalar &y = b(k, j);
                if (!y.is_zero()) {
                    out.entries_[static_cast<size_t>(i) * n + j] += x * y;
                }
            }
        }
    }
    return out;
}

OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionMismatch("matrix sum of mismatched dimensions");
    }
    std::vector<CycScalar> out(a.entries_.size());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = a.entries_[i] + b.entries_[i];
    }
    return OperatorMatrix(a.dim_, std::move(out));
}

OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw DimensionMismatch("matrix difference of mismatched dimensions");
    }
    std::vector<CycScalar> out(a.entries_.size());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = a.entries_[i] - b.entries_[i];
    }
    return OperatorMatrix(a.dim_, std::move(out));
}

bool operator==(const OperatorMatrix &a, const OperatorMatrix &b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

OperatorMatrix kron(const OperatorMatrix &a, const OperatorMatrix &b) {
    const int na = a.dim();
    const int nb = b.dim();
    const int n = na * nb;
    std::vector<CycScalar> out(static_cast<size_t>(n) * n);
    for (int r1 = 0; r1 < na; r1++) {
        for (int c1 = 0; c1 < na; c1++) {
            const CycScalar &x = a(r1, c1);
            if (x.is_zero()) {
                continue;
            }
            for (int r2 = 0; r2 < nb; r2++) {
                for (int c2 = 0; c2 < nb; c2++) {
                    const CycScalar &y = b(r2, c2);
                    if (!y.is_zero()) {
                        out[static_cast<size_t>(r1 * nb + r2) * n + (c1 * nb + c2)] = x * y;
                    }
                }
            }
        }
    }
    return OperatorMatrix(n, std::move(out));
}

OperatorMatrix v0a_matrix(int d, int a) {
    require_label(d, a, "a");
    std::vector<CycScalar> entries(static_cast<size_t>(d) * d);
    for (int k = 0; k < d; k++) {
        int row = (k + d - 1) % d;
        entries[static_cast<size_t>(row) * d + k] = q_power(d, static_cast<long long>(k) * a);
    }
    return OperatorMatrix(d, std::move(entries));
}

OperatorMatrix x_matrix(int d) { return v0a_matrix(d, 0); }

OperatorMatrix z_matrix(int d) {
    require_dim(d);
    std::vector<CycScalar> diag;
    diag.reserve(d);
    for (int k = 0; k < d; k++) {
        diag.push_back(q_power(d, k));
    }
    return OperatorMatrix::diagonal(std::move(diag));
}

OperatorMatrix RadicalDiagonal::squared() const {
    std::vector<CycScalar> diag;
    diag.reserve(radicands.size());
    for (long long n : radicands) {
        diag.emplace_back(static_cast<long>(n));
    }
    return OperatorMatrix::diagonal(std::move(diag));
}

std::vector<double> RadicalDiagonal::values() const {
    std::vector<double> out;
    out.reserve(radicands.size());
    for (long long n : radicands) {
        out.push_back(std::sqrt(static_cast<double>(n)));
    }
    return out;
}

RadicalDiagonal h_diagonal(int d) {
    require_dim(d);
    RadicalDiagonal h;
    h.dim = d;
    for (int k = 0; k < d; k++) {
        h.radicands.push_back(static_cast<long long>(d - 1 - k) * (k + 1));
    }
    return h;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

VerificationReport weyl_report(int d) {
    require_dim(d);
    VerificationReport report;
    report.subject = "weyl";
    report.dim = d;

    const OperatorMatrix x = x_matrix(d);
    const OperatorMatrix z = z_matrix(d);
    const OperatorMatrix xd = x.adjoint();
    const CycScalar q = q_power(d, 1);

    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), true, ok, std::nullopt, ok ? std::string() : std::move(detail)});
    };

    std::vector<OperatorMatrix> v;
    v.reserve(d);
    for (int a = 0; a < d; a++) {
        v.push_back(v0a_matrix(d, a));
    }

    bool unitary = x.is_unitary() && z.is_unitary();
    std::string unitary_detail = unitary ? "" : "X or Z";
    for (int a = 0; a < d && unitary; a++) {
        if (!v[a].is_unitary()) {
            unitary = false;
            unitary_detail = "V_0a with a = " + std::to_string(a);
        }
    }
    add("unitary", unitary, unitary_detail);

    add("x_equals_v00", x == v[0]);
    if (d >= 2) {
        add("z_equals_x_adjoint_v01", z == xd * v[1]);
    }

    int first_bad = -1;
    OperatorMatrix z_pow_a = OperatorMatrix::identity(d);
    for (int a = 0; a < d; a++) {
        if (first_bad < 0 && v[a] != x * z_pow_a) {
            first_bad = a;
        }
        z_pow_a = z_pow_a * z;
    }
    add("v0a_equals_x_z_pow_a", first_bad < 0, "a = " + std::to_string(first_bad));

    add("x_pow_d_is_identity", x.power(d).is_identity());
    add("z_pow_d_is_identity", z.power(d).is_identity());
    add("xz_equals_q_zx", x * z == (z * x).scaled(q));

    first_bad = -1;
    for (int a = 0; a < d && first_bad < 0; a++) {
        if (v[a] * z != (z * v[a]).scaled(q)) {
            first_bad = a;
        }
    }
    add("v0a_z_equals_q_z_v0a", first_bad < 0, "a = " + std::to_string(first_bad));

    // exp(-i pi (d-1) a) = (-1)^((d-1)a).
    first_bad = -1;
    for (int a = 0; a < d && first_bad < 0; a++) {
        long phase = ((static_cast<long long>(d - 1) * a) % 2 == 0) ? 1 : -1;
        if (!v[a].power(d).scaled(CycScalar(phase)).is_identity()) {
            first_bad = a;
        }
    }
    add("phase_corrected_v0a_pow_d_is_identity", first_bad < 0, "a = " + std::to_string(first_bad));

    first_bad = -1;
    for (int k = 0; k < d && first_bad < 0; k++) {
        StateVector e = ket(d, k);
        if (z.apply(e) != e.times(q_power(d, k))) {
            first_bad = k;
        }
    }
    add("z_spectrum", first_bad < 0, "k = " + std::to_string(first_bad));

    return report;
}

Su2Report su2_report(int d, int a, double tolerance) {
    require_label(d, a, "a");
    if (!(tolerance > 0)) {
        throw ValidationError("tolerance must be positive");
    }
    Su2Report out;
    out.a = a;
    out.tolerance = tolerance;
    out.report.subject = "su2";
    out.report.dim = d;

    const OperatorMatrix v = v0a_matrix(d, a);
    const OperatorMatrix vd = v.adjoint();
    const RadicalDiagonal h = h_diagonal(d);
    const OperatorMatrix h2 = h.squared();

    // [j+, j-] = h v v^dag h - v^dag h^2 v = h^2 - v^dag h^2 v, which must be
    // 2 j_z with j_z = diag(j - k) = diag((d - 1 - 2k) / 2).
    const OperatorMatrix lhs = h2 - vd * h2 * v;
    std::vector<CycScalar> two_jz;
    for (int k = 0; k < d; k++) {
        two_jz.emplace_back(static_cast<long>(d - 1 - 2 * k));
        out.jz_diagonal.emplace_back(d - 1 - 2 * k, 2);
        out.jz_diagonal.back().canonicalize();
    }
    bool exact_ok = lhs == OperatorMatrix::diagonal(two_jz);
    out.report.checks.push_back({"h2_minus_conjugated_h2_equals_2jz", true, exact_ok, std::nullopt,
                                 exact_ok ? "" : "h^2 - v^dag h^2 v differs from diag(d - 1 - 2k)"});

    bool top_ok = h.radicands.back() == 0;
    out.report.checks.push_back(
        {"h_last_radicand_zero", true, top_ok, std::nullopt, top_ok ? "" : "wrap-around column of h v survives"});

    FloatMatrix hf(d);
    std::vector<double> hv = h.values();
    for (int k = 0; k < d; k++) {
        hf.at(k, k) = hv[k];
    }
    const FloatMatrix vf = to_float(v);
    const FloatMatrix jp = float_mul(hf, vf);
    const FloatMatrix jm = float_mul(float_adjoint(vf), hf);
    // j_z as built from its definition, not from the expected diagonal.
    FloatMatrix jz = to_float(lhs);
    for (auto &x : jz.m) {
        x *= 0.5;
    }

    auto add_float = [&](std::string name, double residual) {
        bool ok = residual <= tolerance;
        out.report.checks.push_back({std::move(name), false, ok, residual, ok ? "" : "residual exceeds tolerance"});
    };
    add_float("jz_jplus_commutator", commutator_residual(jz, jp, jp, 1.0));
    add_float("jz_jminus_commutator", commutator_residual(jz, jm, jm, -1.0));
    add_float("jplus_jminus_commutator", commutator_residual(jp, jm, jz, 2.0));
    return out;
}

}  // namespace mubkit
