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

#include "mubkit/exact_scalar.h"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "mubkit/errors.h"

using namespace mubkit;

namespace {

CycScalar zeta(int n, long long e) { return CycScalar::root_of_unity(n, e); }

std::vector<long> poly_as_longs(int n) {
    std::vector<long> out;
    for (const auto &c : cyclotomic_polynomial(n)) {
        out.push_back(c.get_si());
    }
    return out;
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

CycScalar random_scalar(std::mt19937_64 &rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    // n coefficients, more than phi(n), so construction has to reduce.
    std::vector<Rational> c(n);
    for (auto &x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycScalar::from_coefficients(n, c);
}

std::complex<double> float_value(const std::vector<Rational> &c, int n) {
    std::complex<double> s = 0;
    for (size_t i = 0; i < c.size(); i++) {
        s += c[i].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(i) / n);
    }
    return s;
}

}  // namespace

TEST_CASE("euler_phi small values") {
    const int expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8};
    for (int n = 1; n <= 16; n++) {
        CHECK(euler_phi(n) == expected[n - 1]);
    }
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials, lowest degree first") {
    CHECK(poly_as_longs(1) == std::vector<long>{-1, 1});
    CHECK(poly_as_longs(2) == std::vector<long>{1, 1});
    CHECK(poly_as_longs(3) == std::vector<long>{1, 1, 1});
    CHECK(poly_as_longs(4) == std::vector<long>{1, 0, 1});
    CHECK(poly_as_longs(6) == std::vector<long>{1, -1, 1});
    CHECK(poly_as_longs(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(poly_as_longs(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 60; n++) {
        CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    }
    // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
    auto p105 = poly_as_longs(105);
    CHECK(std::count(p105.begin(), p105.end(), -2) == 2);
}

TEST_CASE("root_of_unity") {
    CHECK(zeta(1, 0) == CycScalar(1L));
    CHECK(close(zeta(4, 1).to_complex(), {0, 1}, 1e-15));
    CHECK(zeta(3, 1) + zeta(3, 2) == CycScalar(-1L));
    CHECK(zeta(4, 2) == CycScalar(-1L));
    CHECK(zeta(6, 3) == CycScalar(-1L));
    CHECK(zeta(5, -1) == zeta(5, 4));
    CHECK(zeta(7, 7 * 3 + 2) == zeta(7, 2));
    CHECK(close(zeta(6, 1).to_complex(), {std::cos(M_PI / 3), std::sin(M_PI / 3)}, 1e-15));
    for (int n = 2; n <= 24; n++) {
        CycScalar total;
        for (int e = 0; e < n; e++) {
            total += zeta(n, e);
            CHECK(zeta(n, e) * zeta(n, n - e) == CycScalar(1L));
        }
        CHECK(total.is_zero());
    }
    CHECK_THROWS_AS(zeta(0, 1), std::invalid_argument);
}

TEST_CASE("ring operations") {
    const CycScalar i = zeta(4, 1);
    const CycScalar lambda = (CycScalar(1L) - i).scaled(Rational(1, 2));
    const CycScalar mu = (CycScalar(1L) + i).scaled(Rational(1, 2));
    CHECK(i.conjugate() == -i);
    CHECK(zeta(3, 1) * zeta(3, 2) == CycScalar(1L));
    CHECK(lambda * mu == CycScalar(Rational(1, 2)));
    CHECK((CycScalar(1L) + i).magnitude_squared() == CycScalar(2L));
    CHECK((CycScalar(1L) + zeta(3, 1) + zeta(3, 2)).magnitude_squared().is_zero());
    CHECK(i.magnitude_squared() == CycScalar(1L));
}

TEST_CASE("as_rational") {
    CHECK(CycScalar(Rational(1, 2)).as_rational() == Rational(1, 2));
    CHECK_FALSE(zeta(4, 1).as_rational().has_value());
    CHECK((CycScalar(1L) + zeta(4, 1)).magnitude_squared().as_rational() == Rational(2));
    // zeta_8 + zeta_8^-1 = sqrt 2 is real but irrational.
    CHECK_FALSE((zeta(8, 1) + zeta(8, 7)).as_rational().has_value());
    CHECK(((zeta(8, 1) + zeta(8, 7)) * (zeta(8, 1) + zeta(8, 7))).as_rational() == Rational(2));
}

TEST_CASE("mixed conductors lift to the lcm") {
    CHECK(zeta(12, 3) == zeta(4, 1));
    CHECK(zeta(6, 2) == zeta(3, 1));
    CycScalar s = zeta(4, 1) + zeta(3, 1);
    CHECK(s.conductor() == 12);
    CHECK(close(s.to_complex(), std::complex<double>(0, 1) + std::polar(1.0, 2 * M_PI / 3)));
    CHECK(zeta(4, 1).lifted(8) == zeta(8, 2));
    CHECK_THROWS_AS(zeta(4, 1).lifted(6), std::invalid_argument);
}

TEST_CASE("canonical strings round trip") {
    CycScalar x = zeta(6, 1).scaled(Rational(-3, 7)) + CycScalar(Rational(5, 2));
    CHECK(x.to_string() == "conductor:6;coeffs:5/2,-3/7");
    CHECK(CycScalar::parse(x.to_string()) == x);
    CHECK(CycScalar::parse("conductor:1;coeffs:-4").to_string() == "conductor:1;coeffs:-4");
    CHECK(CycScalar().to_string() == "conductor:1;coeffs:0");
    CHECK_THROWS_AS(CycScalar::parse("conductor:6;coeffs:1"), ParseError);
    CHECK_THROWS_AS(CycScalar::parse("conductor:0;coeffs:"), ParseError);
    CHECK_THROWS_AS(CycScalar::parse("conductor:4;coeffs:1,x"), ParseError);
    CHECK_THROWS_AS(CycScalar::parse("coeffs:1"), ParseError);
    CHECK_THROWS_AS(CycScalar::parse("conductor:4;coeffs:1,1/0"), ParseError);
}

TEST_CASE("inverse and division") {
    for (int n : {3, 4, 5, 8, 12, 15}) {
        for (int e = 0; e < n; e++) {
            CycScalar x = CycScalar(2L) + zeta(n, e);
            CHECK(x * x.inverse() == CycScalar(1L));
        }
    }
    CHECK(CycScalar(Rational(2, 3)).lifted(8).inverse() == CycScalar(Rational(3, 2)));
    CHECK_THROWS_AS(CycScalar().inverse(), std::domain_error);
    CHECK_THROWS_AS(zeta(3, 1) / CycScalar(), std::domain_error);
}

TEST_CASE("galois automorphisms") {
    CHECK(zeta(5, 1).galois(2) == zeta(5, 2));
    CHECK(zeta(8, 1).galois(7) == zeta(8, 1).conjugate());
    CHECK_THROWS_AS(zeta(6, 1).galois(3), std::invalid_argument);
}

TEST_CASE("random scalars agree with floating point evaluation") {
    std::mt19937_64 rng(20260117);
    std::uniform_int_distribution<int> conductor(1, 24);
    for (int trial = 0; trial < 1000; trial++) {
        int na = conductor(rng);
        int nb = conductor(rng);
        CycScalar a = random_scalar(rng, na);
        CycScalar b = random_scalar(rng, nb);
        auto fa = a.to_complex();
        auto fb = b.to_complex();
        CHECK(close(float_value(a.coefficients(), a.conductor()), fa));
        CHECK(close((a + b).to_complex(), fa + fb));
        CHECK(close((a - b).to_complex(), fa - fb));
        CHECK(close((a * b).to_complex(), fa * fb, 1e-8));
        CHECK(close(a.conjugate().to_complex(), std::conj(fa)));
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK((a * b).magnitude_squared() == a.magnitude_squared() * b.magnitude_squared());
        CHECK(a.magnitude_squared().conjugate() == a.magnitude_squared());
        bool exact_equal = a == b;
        bool float_equal = std::abs(fa - fb) <= 1e-9;
        CHECK(exact_equal == float_equal);
        CHECK(a == CycScalar::parse(a.to_string()));
        CHECK(a == a.lifted(a.conductor() * 2));
        if (!b.is_zero()) {
            CHECK(close((a / b).to_complex(), fa / fb, 1e-7 * (1 + std::abs(fa / fb))));
        }
    }
}
