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

#include <doctest.h>

#include <set>

#include "golden.h"
#include "mubkit/errors.h"
#include "oracle.h"

using namespace mubkit;

namespace {

void check_table(int d, const Basis &b, const golden::Table &t) {
    INFO("basis ", t.label);
    CHECK(b.label() == t.label);
    REQUIRE(b.size() == static_cast<int>(t.columns.size()));
    for (int i = 0; i < b.size(); i++) {
        INFO("column ", i);
        CHECK(b[i] == golden::column(d, t, i));
    }
}

}  // namespace

TEST_CASE("d = 2 bases match the reference columns") {
    check_table(2, computational_basis(2), golden::d2()[0]);
    check_table(2, basis_B0a(2, 0), golden::d2()[1]);
    check_table(2, basis_B0a(2, 1), golden::d2()[2]);
}

TEST_CASE("d = 3 bases match the reference columns") {
    check_table(3, computational_basis(3), golden::d3()[0]);
    for (int a = 0; a < 3; a++) {
        check_table(3, basis_B0a(3, a), golden::d3()[a + 1]);
    }
}

TEST_CASE("mub_vector agrees with the angular momentum sum") {
    for (int d = 1; d <= 12; d++) {
        for (int a = 0; a < d; a++) {
            for (int alpha = 0; alpha < d; alpha++) {
                auto v = mub_vector(d, a, alpha);
                CHECK(v.is_unit());
                CHECK(oracle::max_abs_diff(v.to_complex(), oracle::mub_vector(d, a, alpha)) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(mub_vector(3, 3, 0), IndexError);
    CHECK_THROWS_AS(mub_vector(3, 0, -1), IndexError);
    CHECK_THROWS_AS(mub_vector(0, 0, 0), ValidationError);
}

TEST_CASE("eigenvalues of v0a") {
    for (int d = 1; d <= 12; d++) {
        for (int a = 0; a < d; a++) {
            std::set<long long> seen;
            for (int alpha = 0; alpha < d; alpha++) {
                auto e = eigen_check(d, a, alpha);
                CHECK(e.passed);
                long long expected = (((d - 1) * a - 2 * alpha) % (2 * d) + 2 * d) % (2 * d);
                CHECK(e.twice_exponent == expected);
                CHECK(e.eigenvalue == CycScalar::root_of_unity(2 * d, expected));
                auto f = oracle::apply(oracle::v0a(d, a), oracle::mub_vector(d, a, alpha));
                auto g = oracle::mub_vector(d, a, alpha);
                for (auto &x : g) {
                    x *= oracle::q_pow(d, (d - 1) * a / 2.0 - alpha);
                }
                CHECK(oracle::max_abs_diff(f, g) < 1e-12);
                seen.insert(expected);
            }
            CHECK(seen.size() == static_cast<size_t>(d));
        }
    }
}

TEST_CASE("eigenvalue_of") {
    auto v = mub_vector(4, 1, 2);
    CHECK(eigenvalue_of(v0a_matrix(4, 1), v) == eigen_check(4, 1, 2).eigenvalue);
    CHECK_FALSE(eigenvalue_of(v0a_matrix(4, 0), v).has_value());
    CHECK(eigenvalue_of(z_matrix(3), ket(3, 2)) == CycScalar::root_of_unity(3, 2));
}

TEST_CASE("z shifts alpha down by one") {
    for (int d = 2; d <= 7; d++) {
        for (int a = 0; a < d; a++) {
            for (int alpha = 0; alpha < d; alpha++) {
                auto lhs = z_matrix(d).apply(mub_vector(d, a, alpha));
                auto rhs = mub_vector(d, a, (alpha + d - 1) % d).times(CycScalar::root_of_unity(d, -1));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("certify_unbiased verdicts") {
    auto c3 = mub_set(3).certificate;
    CHECK(c3.all_unbiased());
    CHECK(c3.maximal);
    CHECK(c3.pairs.size() == 6);

    auto bad = certify_unbiased({basis_B0a(4, 0), basis_B0a(4, 2)});
    REQUIRE(bad.pairs.size() == 1);
    CHECK(bad.pairs[0].verdict == Verdict::kFailed);
    REQUIRE(bad.pairs[0].witness.has_value());
    CHECK(bad.pairs[0].witness->overlap_sq.as_rational() == Rational(1, 2));
    CHECK_FALSE(bad.all_unbiased());

    // B_00 and B_01 are unbiased in every dimension, composite or not.
    CHECK(certify_unbiased({basis_B0a(4, 0), basis_B0a(4, 1)}).all_unbiased());

    auto same = certify_unbiased({basis_B0a(3, 1), basis_B0a(3, 1)});
    CHECK(same.pairs[0].verdict == Verdict::kIdenticalOrthonormal);
    CHECK_FALSE(same.all_unbiased());

    CHECK(certify_unbiased({computational_basis(5)}).pairs.empty());
    CHECK_THROWS_AS(certify_unbiased({computational_basis(2), computational_basis(3)}), DimensionMismatch);
}

TEST_CASE("certificates are deterministic across runs") {
    auto a = certify_unbiased(b0a_family(6).bases);
    auto b = certify_unbiased(b0a_family(6).bases);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (size_t i = 0; i < a.pairs.size(); i++) {
        CHECK(a.pairs[i].a == b.pairs[i].a);
        CHECK(a.pairs[i].b == b.pairs[i].b);
        CHECK(a.pairs[i].verdict == b.pairs[i].verdict);
    }
}

TEST_CASE("prime dimensions give d + 1 bases with overlaps 1/p") {
    for (int p : {2, 3, 5, 7}) {
        auto s = mub_set(p);
        CHECK(s.bases.size() == static_cast<size_t>(p + 1));
        CHECK(s.certificate.maximal);
        CHECK_FALSE(s.maximal_unknown_by_this_method);
        for (size_t i = 0; i < s.bases.size(); i++) {
            for (size_t j = i + 1; j < s.bases.size(); j++) {
                for (int u = 0; u < p; u++) {
                    for (int v = 0; v < p; v++) {
                        auto f = oracle::inner(s.bases[i][u].to_complex(), s.bases[j][v].to_complex());
                        CHECK(std::norm(f) == doctest::Approx(1.0 / p));
                    }
                }
            }
        }
    }
}

TEST_CASE("composite dimensions return the three universal bases") {
    for (int d : {4, 6, 8, 9, 10, 12}) {
        auto s = mub_set(d);
        CHECK(s.bases.size() == 3);
        CHECK(s.maximal_unknown_by_this_method);
        CHECK(s.certificate.all_unbiased());
        CHECK_FALSE(s.certificate.maximal);
    }
    auto fam = b0a_family(4);
    CHECK_FALSE(fam.certificate.all_unbiased());
    CHECK_THROWS_AS(mub_set(1), ValidationError);
}

TEST_CASE("is_prime") {
    std::vector<int> primes;
    for (int n = -3; n < 40; n++) {
        if (is_prime(n)) {
            primes.push_back(n);
        }
    }
    CHECK(primes == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
}

TEST_CASE("two qubit bases match the reference columns") {
    auto t = two_qubit_mub_set();
    REQUIRE(t.bases.size() == 5);
    for (int i = 0; i < 5; i++) {
        check_table(4, t.bases[i], golden::d4()[i]);
    }
    CHECK(t.certificate.all_unbiased());
    CHECK(t.certificate.maximal);
    CHECK(t.eigenvalues[0].empty());
    const int ab[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (int i = 1; i < 5; i++) {
        auto w = w_matrix(ab[i - 1][0], ab[i - 1][1]);
        REQUIRE(t.eigenvalues[i].size() == 4);
        for (int v = 0; v < 4; v++) {
            CHECK(w.apply(t.bases[i][v]) == t.bases[i][v].times(t.eigenvalues[i][v]));
        }
    }
}

TEST_CASE("w_ab is the Kronecker product of single qubit shifts") {
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            auto f = oracle::kron(oracle::v0a(2, a), oracle::v0a(2, b));
            CHECK(oracle::max_abs_diff(w_matrix(a, b).to_complex(), f.a) < 1e-12);
        }
    }
}

TEST_CASE("SU2 adapted basis") {
    auto b = su2_adapted_basis();
    CHECK(b.size() == 4);
    REQUIRE(b.tags().size() == 4);
    for (int i = 0; i < 3; i++) {
        CHECK(swap_tensor_factors(b[i], 2, 2) == b[i]);
    }
    CHECK(swap_tensor_factors(b[3], 2, 2) == b[3].times(CycScalar(-1L)));
    CHECK(b[0] == ket(4, 0));
    CHECK(b[2] == ket(4, 3));
}
