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

#include "mubkit/hilbert.h"

#include <cmath>
#include <cstdlib>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

void require_same_dim(const StateVector &u, const StateVector &v, const char *what) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(u.dim()) + " and " +
                                std::to_string(v.dim()));
    }
}

std::optional<Rational> exact_sqrt(const Rational &r) {
    if (sgn(r) < 0) {
        return std::nullopt;
    }
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    return Rational(sqrt(num), sqrt(den));
}

}  // namespace

QuditIndex label_to_k(SpinLabel label) {
    if (label.two_j < 0) {
        throw ValidationError("2j must be nonnegative");
    }
    if (std::abs(label.two_m) > label.two_j) {
        throw ValidationError("|m| exceeds j");
    }
    if ((label.two_j - label.two_m) % 2 != 0) {
        throw ValidationError("j and m must have the same parity");
    }
    return {label.two_j + 1, (label.two_j - label.two_m) / 2};
}

SpinLabel k_to_label(int d, int k) {
    if (d < 1) {
        throw ValidationError("dimension must be positive");
    }
    if (k < 0 || k >= d) {
        throw IndexError("k = " + std::to_string(k) + " outside Z_" + std::to_string(d));
    }
    return {d - 1, d - 1 - 2 * k};
}

StateVector::StateVector(std::vector<CycScalar> entries, Rational scale_sq)
    : entries_(std::move(entries)), scale_sq_(std::move(scale_sq)) {
    scale_sq_.canonicalize();
    if (entries_.empty()) {
        throw ValidationError("state vector needs at least one entry");
    }
    if (sgn(scale_sq_) <= 0) {
        throw ValidationError("scale_sq must be positive");
    }
}

CycScalar StateVector::norm_squared() const {
    CycScalar sum;
    for (const auto &e : entries_) {
        if (!e.is_zero()) {
            sum += e.magnitude_squared();
        }
    }
    return sum.scaled(scale_sq_);
}

bool StateVector::is_unit() const { return norm_squared() == CycScalar(1L); }

StateVector StateVector::times(const CycScalar &factor) const {
    std::vector<CycScalar> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(e * factor);
    }
    return StateVector(std::move(out), scale_sq_);
}

std::vector<std::complex<double>> StateVector::to_complex() const {
    double s = std::sqrt(scale_sq_.get_d());
    std::vector<std::complex<double>> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) {
        out.push_back(s * e.to_complex());
    }
    return out;
}

bool operator==(const StateVector &u, const StateVector &v) {
    if (u.dim() != v.dim()) {
        return false;
    }
    // Need sqrt(su) u_k = sqrt(sv) v_k, i.e. u_k * sqrt(c) = v_k with c = su / sv.
    Rational c = u.scale_sq_ / v.scale_sq_;
    if (auto root = exact_sqrt(c)) {
        for (int k = 0; k < u.dim(); k++) {
            if (u.entries_[k].scaled(*root) != v.entries_[k]) {
                return false;
            }
        }
        return true;
    }
    // Irrational ratio: squares must agree and each v_k must be the positive
    // (not negative) multiple of u_k. Re(u_k conj(v_k)) = +-sqrt(c)|u_k|^2 is
    // a nonzero real here, so its sign is read off reliably in floating point.
    for (int k = 0; k < u.dim(); k++) {
        const CycScalar &a = u.entries_[k];
        const CycScalar &b = v.entries_[k];
        if ((a * a).scaled(c) != b * b) {
            return false;
        }
        if (!a.is_zero() && (a * b.conjugate()).to_complex().real() <= 0) {
            return false;
        }
    }
    return true;
}

std::complex<double> ScaledScalar::to_complex() const { return std::sqrt(scale_sq.get_d()) * value.to_complex(); }

StateVector ket(int d, int k) {
    if (d < 1) {
        throw ValidationError("dimension must be positive");
    }
    if (k < 0 || k >= d) {
        throw IndexError("ket index " + std::to_string(k) + " outside Z_" + std::to_string(d));
    }
    std::vector<CycScalar> entries(d);
    entries[k] = CycScalar(1L);
    return StateVector(std::move(entries));
}

ScaledScalar inner(const StateVector &u, const StateVector &v) {
    require_same_dim(u, v, "inner product");
    CycScalar sum;
    for (int k = 0; k < u.dim(); k++) {
        const CycScalar &a = u.entries()[k];
        const CycScalar &b = v.entries()[k];
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        sum += a.conjugate() * b;
    }
    return {sum, u.scale_sq() * v.scale_sq()};
}

StateVector tensor(const StateVector &u, const StateVector &v) {
    std::vector<CycScalar> out;
    out.reserve(static_cast<size_t>(u.dim()) * v.dim());
    for (const auto &a : u.entries()) {
        for (const auto &b : v.entries()) {
            out.push_back(a * b);
        }
    }
    return StateVector(std::move(out), u.scale_sq() * v.scale_sq());
}

StateVector combine(const CycScalar &c1, const StateVector &u, const CycScalar &c2, const StateVector &v) {
    require_same_dim(u, v, "linear combination");
    if (u.scale_sq() != v.scale_sq()) {
        throw ValidationError("linear combination needs equal scale_sq");
    }
    std::vector<CycScalar> out;
    out.reserve(u.dim());
    for (int k = 0; k < u.dim(); k++) {
        out.push_back(c1 * u.entries()[k] + c2 * v.entries()[k]);
    }
    return StateVector(std::move(out), u.scale_sq());
}

bool equal_up_to_global_phase(const StateVector &u, const StateVector &v) {
    if (u.dim() != v.dim()) {
        return false;
    }
    int lead = -1;
    for (int k = 0; k < u.dim(); k++) {
        if (!u.entries()[k].is_zero()) {
            lead = k;
            break;
        }
    }
    if (lead < 0) {
        return false;  // scale_sq > 0 rules out the zero vector for valid states
    }
    const CycScalar &ul = u.entries()[lead];
    const CycScalar &vl = v.entries()[lead];
    if (vl.is_zero()) {
        return false;
    }
    // Proportional: u_k v_lead = v_k u_lead for all k.
    for (int k = 0; k < u.dim(); k++) {
        if (u.entries()[k] * vl != v.entries()[k] * ul) {
            return false;
        }
    }
    // Equal moduli at the leading entry.
    return ul.magnitude_squared().scaled(u.scale_sq()) == vl.magnitude_squared().scaled(v.scale_sq());
}

StateVector with_leading_phase_removed(const StateVector &v) {
    for (int k = 0; k < v.dim(); k++) {
        const CycScalar &e = v.entries()[k];
        if (e.is_zero()) {
            continue;
        }
        auto mag = e.magnitude_squared().as_rational();
        if (!mag) {
            throw ValidationError("leading entry has irrational modulus");
        }
        StateVector rotated = v.times(e.conjugate());
        return StateVector(rotated.entries(), v.scale_sq() / *mag);
    }
    throw ValidationError("zero vector has no leading phase");
}

StateVector swap_tensor_factors(const StateVector &v, int d1, int d2) {
    if (d1 < 1 || d2 < 1 || d1 * d2 != v.dim()) {
        throw DimensionMismatch("factor dimensions do not match the vector");
    }
    std::vector<CycScalar> out(v.dim());
    for (int k = 0; k < d1; k++) {
        for (int l = 0; l < d2; l++) {
            out[l * d1 + k] = v.entries()[k * d2 + l];
        }
    }
    return StateVector(std::move(out), v.scale_sq());
}

Basis::Basis(std::string label, std::vector<StateVector> vectors, std::vector<std::string> tags)
    : label_(std::move(label)), dim_(0), vectors_(std::move(vectors)), tags_(std::move(tags)) {
    if (vectors_.empty()) {
        throw ValidationError("basis '" + label_ + "' is empty");
    }
    dim_ = vectors_[0].dim();
    if (static_cast<int>(vectors_.size()) != dim_) {
        throw ValidationError("basis '" + label_ + "' needs exactly " + std::to_string(dim_) + " vectors");
    }
    if (!tags_.empty() && tags_.size() != vectors_.size()) {
        throw ValidationError("basis '" + label_ + "' has a tag count that differs from its size");
    }
    for (int i = 0; i < dim_; i++) {
        if (vectors_[i].dim() != dim_) {
            throw DimensionMismatch("basis '" + label_ + "' mixes dimensions");
        }
        if (!vectors_[i].is_unit()) {
            throw ValidationError("basis '" + label_ + "' vector " + std::to_string(i) + " is not unit norm");
        }
        for (int j = 0; j < i; j++) {
            if (!inner(vectors_[j], vectors_[i]).is_zero()) {
                throw ValidationError("basis '" + label_ + "' vectors " + std::to_string(j) + " and " +
                                      std::to_string(i) + " are not orthogonal");
            }
        }
    }
}

}  // namespace mubkit
