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

#include "mubkit/mub.h"

#include <algorithm>
#include <future>
#include <thread>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

void require_label(int d, int x, const char *name) {
    if (d < 1) {
        throw ValidationError("dimension must be positive");
    }
    if (x < 0 || x >= d) {
        throw IndexError(std::string(name) + " = " + std::to_string(x) + " outside Z_" + std::to_string(d));
    }
}

// Reduced into [0, 2d).
long long eigen_twice_exponent(int d, int a, int alpha) {
    long long e = (static_cast<long long>(d - 1) * a - 2LL * alpha) % (2LL * d);
    return e < 0 ? e + 2LL * d : e;
}

StateVector conjugated(const StateVector &v) {
    std::vector<CycScalar> out;
    out.reserve(v.dim());
    for (const auto &e : v.entries()) {
        out.push_back(e.conjugate());
    }
    return StateVector(std::move(out), v.scale_sq());
}

PairVerdict certify_pair(const Basis &x, const Basis &y, int ix, int iy) {
    const int d = x.dim();
    const Rational target(1, d);
    const Rational one(1);
    std::vector<StateVector> bras;
    bras.reserve(x.size());
    for (const auto &u : x.vectors()) {
        bras.push_back(conjugated(u));
    }

    PairVerdict pv;
    pv.a = ix;
    pv.b = iy;
    bool all_target = true;
    bool all_zero_one = true;
    std::optional<OverlapWitness> first_off_target;
    for (int i = 0; i < x.size(); i++) {
        const StateVector &bra = bras[i];
        for (int j = 0; j < y.size(); j++) {
            const StateVector &ket_v = y[j];
            CycScalar sum;
            for (int k = 0; k < d; k++) {
                const CycScalar &p = bra.entries()[k];
                const CycScalar &r = ket_v.entries()[k];
                if (!p.is_zero() && !r.is_zero()) {
                    sum += p * r;
                }
            }
            CycScalar mag = sum.magnitude_squared().scaled(bra.scale_sq() * ket_v.scale_sq());
            auto rat = mag.as_rational();
            bool is_target = rat && *rat == target;
            bool is_zero_one = rat && (sgn(*rat) == 0 || *rat == one);
            if (!is_target) {
                all_target = false;
                if (!first_off_target) {
                    first_off_target = OverlapWitness{i, j, mag};
                }
            }
            if (!is_zero_one) {
                all_zero_one = false;
            }
            if (!all_target && !all_zero_one) {
                pv.verdict = Verdict::kFailed;
                pv.witness = first_off_target;
                return pv;
            }
        }
    }
    // d = 1 makes 1/d = 1, where both readings hold; unbiased wins.
    pv.verdict = all_target ? Verdict::kUnbiased : Verdict::kIdenticalOrthonormal;
    return pv;
}

std::vector<Basis> b0a_bases(int d) {
    std::vector<Basis> out;
    out.reserve(d + 1);
    for (int a = 0; a < d; a++) {
        out.push_back(basis_B0a(d, a));
    }
    return out;
}

}  // namespace

StateVector mub_vector(int d, int a, int alpha) {
    require_label(d, a, "a");
    require_label(d, alpha, "alpha");
    std::vector<CycScalar> entries;
    entries.reserve(d);
    for (int k = 0; k < d; k++) {
        long long twice = static_cast<long long>(d - k - 1) * (k + 1) * a - 2LL * (k + 1) * alpha;
        entries.push_back(half_q_power(d, twice));
    }
    return StateVector(std::move(entries), Rational(1, d));
}

EigenCheck eigen_check(int d, int a, int alpha) {
    EigenCheck out;
    out.twice_exponent = eigen_twice_exponent(d, a, alpha);
    out.eigenvalue = half_q_power(d, out.twice_exponent);
    StateVector v = mub_vector(d, a, alpha);
    out.passed = v0a_matrix(d, a).apply(v) == v.times(out.eigenvalue);
    return out;
}

std::optional<CycScalar> eigenvalue_of(const OperatorMatrix &m, const StateVector &v) {
    StateVector image = m.apply(v);
    for (int k = 0; k < v.dim(); k++) {
        if (v.entries()[k].is_zero()) {
            continue;
        }
        CycScalar lambda = image.entries()[k] / v.entries()[k];
        if (image == v.times(lambda)) {
            return lambda;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

Basis basis_B0a(int d, int a) {
    require_label(d, a, "a");
    std::vector<StateVector> vectors;
    vectors.reserve(d);
    for (int alpha = 0; alpha < d; alpha++) {
        vectors.push_back(mub_vector(d, a, alpha));
    }
    return Basis("B_0" + std::to_string(a), std::move(vectors));
}

Basis computational_basis(int d) {
    if (d < 1) {
        throw ValidationError("dimension must be positive");
    }
    std::vector<StateVector> vectors;
    vectors.reserve(d);
    for (int k = 0; k < d; k++) {
        vectors.push_back(ket(d, k));
    }
    return Basis("B_" + std::to_string(d), std::move(vectors));
}

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kUnbiased:
            return "unbiased";
        case Verdict::kIdenticalOrthonormal:
            return "identical-orthonormal";
        case Verdict::kFailed:
            return "failed";
    }
    return "failed";
}

bool MubCertificate::all_unbiased() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairVerdict &p) { return p.verdict == Verdict::kUnbiased; });
}

MubCertificate certify_unbiased(const std::vector<Basis> &bases) {
    MubCertificate cert;
    if (bases.empty()) {
        return cert;
    }
    cert.dim = bases[0].dim();
    for (const auto &b : bases) {
        if (b.dim() != cert.dim) {
            throw DimensionMismatch("cannot certify bases of different dimensions");
        }
        cert.basis_labels.push_back(b.label());
    }

    std::vector<std::pair<int, int>> jobs;
    for (int i = 0; i < static_cast<int>(bases.size()); i++) {
        for (int j = i + 1; j < static_cast<int>(bases.size()); j++) {
            jobs.emplace_back(i, j);
        }
    }
    cert.pairs.resize(jobs.size());

    // Pairs are independent; results land in a fixed slot so the output order
    // does not depend on scheduling.
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));
    workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
    if (workers <= 1 || cert.dim <= 3) {
        for (size_t n = 0; n < jobs.size(); n++) {
            cert.pairs[n] = certify_pair(bases[jobs[n].first], bases[jobs[n].second], jobs[n].first, jobs[n].second);
        }
    } else {
        std::vector<std::future<void>> tasks;
        for (unsigned w = 0; w < workers; w++) {
            tasks.push_back(std::async(std::launch::async, [&, w] {
                for (size_t n = w; n < jobs.size(); n += workers) {
                    cert.pairs[n] =
                        certify_pair(bases[jobs[n].first], bases[jobs[n].second], jobs[n].first, jobs[n].second);
                }
            }));
        }
        for (auto &t : tasks) {
            t.get();
        }
    }
    cert.maximal = static_cast<int>(bases.size()) == cert.dim + 1 && cert.all_unbiased();
    return cert;
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

MubSet mub_set(int d) {
    if (d < 2) {
        throw ValidationError("mub_set requires d >= 2");
    }
    MubSet out;
    if (is_prime(d)) {
        out.bases = b0a_bases(d);
        out.bases.push_back(computational_basis(d));
    } else {
        out.bases = {computational_basis(d), basis_B0a(d, 0), basis_B0a(d, 1)};
        out.maximal_unknown_by_this_method = true;
    }
    out.certificate = certify_unbiased(out.bases);
    return out;
}

MubSet b0a_family(int d) {
    if (d < 2) {
        throw ValidationError("b0a_family requires d >= 2");
    }
    MubSet out;
    out.bases = b0a_bases(d);
    out.bases.push_back(computational_basis(d));
    out.certificate = certify_unbiased(out.bases);
    out.maximal_unknown_by_this_method = !is_prime(d);
    return out;
}

OperatorMatrix w_matrix(int a, int b) { return kron(v0a_matrix(2, a), v0a_matrix(2, b)); }

TwoQubitMubs two_qubit_mub_set() {
    // The two-qubit tables take q^(1/2) = -i for the single-qubit factors, the
    // opposite branch from mub_vector, and write each factor with a positive
    // first entry. Conjugating |a alpha> and removing its leading phase
    // reproduces that convention.
    auto factor = [](int a, int alpha) { return with_leading_phase_removed(conjugated(mub_vector(2, a, alpha))); };
    auto product = [&](int a, int b, int alpha, int beta) { return tensor(factor(a, alpha), factor(b, beta)); };

    const CycScalar i_unit = CycScalar::root_of_unity(4, 1);
    const CycScalar lambda = (CycScalar(1L) - i_unit).scaled(Rational(1, 2));
    const CycScalar mu = (CycScalar(1L) + i_unit).scaled(Rational(1, 2));

    TwoQubitMubs out;
    {
        std::vector<StateVector> canon;
        for (int k = 0; k < 2; k++) {
            for (int l = 0; l < 2; l++) {
                canon.push_back(tensor(ket(2, k), ket(2, l)));
            }
        }
        out.bases.emplace_back("canonical", std::move(canon));
        out.eigenvalues.emplace_back();
    }

    const int labels[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (const auto &ab : labels) {
        int a = ab[0];
        int b = ab[1];
        std::vector<StateVector> vectors;
        if (a == b) {
            for (int alpha = 0; alpha < 2; alpha++) {
                for (int beta = 0; beta < 2; beta++) {
                    vectors.push_back(product(a, b, alpha, beta));
                }
            }
        } else {
            // The product eigenvectors pair up into degenerate eigenspaces;
            // these combinations are the ones tabulated, not solver output.
            StateVector p00 = product(a, b, 0, 0);
            StateVector p01 = product(a, b, 0, 1);
            StateVector p10 = product(a, b, 1, 0);
            StateVector p11 = product(a, b, 1, 1);
            vectors.push_back(combine(lambda, p00, mu, p11));
            vectors.push_back(combine(mu, p00, lambda, p11));
            vectors.push_back(combine(lambda, p01, mu, p10));
            vectors.push_back(combine(mu, p01, lambda, p10));
        }
        const OperatorMatrix w = w_matrix(a, b);
        std::vector<CycScalar> eig;
        for (const auto &v : vectors) {
            auto e = eigenvalue_of(w, v);
            if (!e) {
                throw InternalError("two-qubit basis vector is not an eigenvector of w_" + std::to_string(a) +
                                    std::to_string(b));
            }
            eig.push_back(*e);
        }
        out.bases.emplace_back("w_" + std::to_string(a) + std::to_string(b), std::move(vectors));
        out.eigenvalues.push_back(std::move(eig));
    }
    out.certificate = certify_unbiased(out.bases);
    return out;
}

Basis su2_adapted_basis() {
    const StateVector up = ket(2, 0);
    const StateVector down = ket(2, 1);
    const StateVector ab = tensor(up, down);
    const StateVector ba = tensor(down, up);
    const CycScalar one(1L);
    StateVector sym = combine(one, ab, one, ba);
    StateVector anti = combine(one, ab, CycScalar(-1L), ba);
    std::vector<StateVector> vectors = {
        tensor(up, up),
        StateVector(sym.entries(), Rational(1, 2)),
        tensor(down, down),
        StateVector(anti.entries(), Rational(1, 2)),
    };
    std::vector<std::string> tags = {
        "J=1 M=1 symmetric",
        "J=1 M=0 symmetric",
        "J=1 M=-1 symmetric",
        "J=0 M=0 antisymmetric",
    };
    return Basis("SU2_adapted", std::move(vectors), std::move(tags));
}

}  // namespace mubkit
