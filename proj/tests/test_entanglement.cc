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

#include <doctest.h>

#include <random>

#include "golden.h"
#include "mubkit/errors.h"
#include "mubkit/mub.h"
#include "mubkit/pauli_group.h"
#include "oracle.h"

using namespace mubkit;

namespace {

std::vector<std::complex<double>> random_unit_vector(std::mt19937_64 &rng, int n) {
    std::normal_distribution<double> g;
    std::vector<std::complex<double>> v(n);
    double norm = 0;
    for (auto &x : v) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : v) {
        x /= std::sqrt(norm);
    }
    return v;
}

}  // namespace

TEST_CASE("global tangle examples") {
    auto product = global_tangle(tensor(ket(2, 0), ket(2, 1)), 2);
    CHECK(product.det_numerator.is_zero());
    CHECK(product.classification == TangleClass::kNone);

    auto w01 = golden::column(4, golden::d4()[3], 0);
    auto t = global_tangle(w01, 2);
    CHECK(t.det_abs_sq == Rational(1, 4));
    CHECK(t.classification == TangleClass::kMaximal);
    CHECK(t.det_abs_float == doctest::Approx(0.5));
    // det A = (1/4) det [[1, 1], [-i, i]] = i/2.
    CHECK(t.det_scale_sq == Rational(1, 16));
    CHECK(t.det_numerator == CycScalar::root_of_unity(4, 1) * CycScalar(2L));

    auto w00 = global_tangle(golden::column(4, golden::d4()[1], 1), 2);
    CHECK(w00.classification == TangleClass::kNone);
    CHECK(w00.det_abs_sq == Rational(0));
}

TEST_CASE("classify two qubit bases") {
    auto t = two_qubit_mub_set();
    const char *expected[] = {"all-none", "all-none", "all-none", "all-maximal", "all-maximal"};
    for (int i = 0; i < 5; i++) {
        auto c = classify_basis(t.bases[i], 2);
        CHECK(c.summary == expected[i]);
        CHECK(c.vectors.size() == 4);
        for (const auto &v : c.vectors) {
            if (i >= 3) {
                CHECK(v.det_abs_sq == Rational(1, 4));
            }
        }
    }
    CHECK(classify_basis(su2_adapted_basis(), 2).summary == "mixed");
    CHECK_THROWS_AS(classify_basis(computational_basis(3), 2), DimensionMismatch);
}

TEST_CASE("coefficient matrix preconditions") {
    CHECK_THROWS_AS(coefficient_matrix(ket(5, 0), 2), DimensionMismatch);
    CHECK_THROWS_AS(coefficient_matrix(StateVector({CycScalar(1L), CycScalar(1L), CycScalar(), CycScalar()}), 2),
                    ValidationError);
    auto a = coefficient_matrix(golden::column(4, golden::d4()[2], 0), 2);
    CHECK(a.factor_dim == 2);
    CHECK(a.scale_sq == Rational(1, 4));
    CHECK(a.numerators(1, 0) == CycScalar::root_of_unity(4, 1));
}

TEST_CASE("exact determinant matches a permutation expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<int> expo(0, 11);
    for (int n = 1; n <= 5; n++) {
        for (int trial = 0; trial < 20; trial++) {
            std::vector<CycScalar> entries;
            oracle::Mat f(n);
            for (int i = 0; i < n * n; i++) {
                CycScalar x = coin(rng) == 0 ? CycScalar() : CycScalar::root_of_unity(12, expo(rng)).scaled(coin(rng));
                entries.push_back(x);
                f.a[i] = x.to_complex();
            }
            OperatorMatrix m(n, entries);
            auto det = exact_determinant(m);
            CHECK(std::abs(det.to_complex() - oracle::det_leibniz(f)) < 1e-9);
            CHECK(determinant_abs(f.a, n) == doctest::Approx(std::abs(oracle::det_leibniz(f))).epsilon(1e-9));
        }
    }
    CHECK(exact_determinant(OperatorMatrix::identity(6)) == CycScalar(1L));
    CHECK(exact_determinant(x_matrix(4)) == CycScalar(-1L));
    CHECK_THROWS_AS(exact_determinant(OperatorMatrix(17)), SizeLimitError);
    CHECK_THROWS_AS(determinant_abs(std::vector<std::complex<double>>(3), 2), DimensionMismatch);
}

TEST_CASE("|det A| bound on random unit vectors") {
    std::mt19937_64 rng(0xdeadbeef);
    for (int d : {2, 3}) {
        double bound = std::pow(static_cast<double>(d), -d / 2.0);
        double worst = 0;
        for (int trial = 0; trial < 10000; trial++) {
            auto v = random_unit_vector(rng, d * d);
            worst = std::max(worst, determinant_abs(v, d));
        }
        CHECK(worst <= bound + 1e-9);
    }
}

TEST_CASE("global phase invariance and product states") {
    for (int d : {2, 3}) {
        for (int a = 0; a < d; a++) {
            for (int alpha = 0; alpha < d; alpha++) {
                auto u = mub_vector(d, a, alpha);
                auto v = mub_vector(d, (a + 1) % d, (alpha + 2) % d);
                auto p = tensor(u, v);
                CHECK(global_tangle(p, d).classification == TangleClass::kNone);
                CHECK(global_tangle(tensor(ket(d, alpha), v), d).det_numerator.is_zero());
            }
        }
    }
    // A maximally entangled qutrit pair: sum_k |k>|k> / sqrt 3.
    std::vector<CycScalar> e(9);
    for (int k = 0; k < 3; k++) {
        e[k * 3 + k] = CycScalar(1L);
    }
    StateVector bell(e, Rational(1, 3));
    auto t = global_tangle(bell, 3);
    CHECK(t.det_abs_sq == Rational(1, 27));
    CHECK(t.classification == TangleClass::kMaximal);
    for (int s = 0; s < 6; s++) {
        auto r = global_tangle(bell.times(CycScalar::root_of_unity(6, s)), 3);
        CHECK(r.det_abs_sq == t.det_abs_sq);
    }
    // Unequal Schmidt weights sit strictly between the two extremes.
    StateVector partial({CycScalar(1L), CycScalar(), CycScalar(), CycScalar(2L)}, Rational(1, 5));
    auto pt = global_tangle(partial, 2);
    CHECK(pt.classification == TangleClass::kIntermediate);
    CHECK(pt.det_abs_sq == Rational(4, 25));
}

TEST_CASE("local Pauli unitaries preserve |det A|") {
    std::mt19937_64 rng(99);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 50; trial++) {
            auto v = random_unit_vector(rng, d * d);
            oracle::Mat a(d);
            a.a = v;
            std::uniform_int_distribution<int> z(0, d - 1);
            auto u = element_matrix(d, {z(rng), z(rng), z(rng)}).to_complex();
            auto w = element_matrix(d, {z(rng), z(rng), z(rng)}).to_complex();
            oracle::Mat um(d), wm(d);
            um.a = u;
            wm.a = w;
            // (U (x) W) applied to the state is U A W^T on the coefficient matrix.
            oracle::Mat wt(d);
            for (int r = 0; r < d; r++) {
                for (int c = 0; c < d; c++) {
                    wt(r, c) = wm(c, r);
                }
            }
            auto b = oracle::mul(oracle::mul(um, a), wt);
            CHECK(determinant_abs(b.a, d) == doctest::Approx(determinant_abs(a.a, d)).epsilon(1e-9));
            auto stacked = oracle::apply(oracle::kron(um, wm), v);
            CHECK(oracle::max_abs_diff(stacked, b.a) < 1e-12);
        }
    }
}
