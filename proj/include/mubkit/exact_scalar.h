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

#ifndef MUBKIT_EXACT_SCALAR_H
#define MUBKIT_EXACT_SCALAR_H

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mubkit {

/// Arbitrary precision rational number.
using Rational = mpq_class;

/// Canonical text of a rational: "p/q" in lowest terms, or "p" when q = 1.
std::string rational_to_string(const Rational &r);
/// Inverse of rational_to_string. Throws ParseError.
Rational parse_rational(std::string_view text);

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed once per n by dividing x^n - 1 by every Phi_m, m | n, m < n.
const std::vector<mpz_class> &cyclotomic_polynomial(int n);

/// An exact element of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N).
///
/// The value is stored as rational coefficients over the power basis
/// 1, zeta, ..., zeta^(phi(N) - 1), which is reduced modulo Phi_N and therefore
/// unique for a given conductor. Operands with different conductors are lifted
/// to the least common multiple before combining, so values of different
/// conductors compare equal whenever they are the same complex number.
///
/// Values are immutable once built; all operations are pure.
class CycScalar {
   public:
    /// The zero scalar in Q.
    CycScalar();
    CycScalar(long value);  // NOLINT(google-explicit-constructor)
    explicit CycScalar(Rational value);

    /// zeta_N^e, with e taken modulo N.
    static CycScalar root_of_unity(int n, long long e);
    /// Builds sum_i coeffs[i] zeta_N^i for any number of coefficients; the
    /// result is reduced to canonical form.
    static CycScalar from_coefficients(int conductor, std::vector<Rational> coeffs);
    /// Parses the "conductor:N;coeffs:c0,c1,..." form produced by to_string.
    static CycScalar parse(std::string_view text);

    int conductor() const { return conductor_; }
    /// Exactly phi(conductor) canonical coefficients.
    const std::vector<Rational> &coefficients() const { return coeffs_; }

    bool is_zero() const { return zero_; }
    /// True when only the zeta^0 coefficient can be nonzero.
    bool is_rational() const { return rational_; }
    std::optional<Rational> as_rational() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    /// The same value expressed with conductor `multiple`, which must be a
    /// multiple of conductor().
    CycScalar lifted(int multiple) const;
    CycScalar conjugate() const;
    /// The field automorphism zeta -> zeta^k, for k coprime to the conductor.
    CycScalar galois(int k) const;
    /// a * conjugate(a).
    CycScalar magnitude_squared() const;
    /// Multiplicative inverse via the field norm. Throws std::domain_error on zero.
    CycScalar inverse() const;
    CycScalar scaled(const Rational &factor) const;

    CycScalar operator-() const;
    friend CycScalar operator+(const CycScalar &a, const CycScalar &b);
    friend CycScalar operator-(const CycScalar &a, const CycScalar &b);
    friend CycScalar operator*(const CycScalar &a, const CycScalar &b);
    friend CycScalar operator/(const CycScalar &a, const CycScalar &b);
    CycScalar &operator+=(const CycScalar &other);
    CycScalar &operator-=(const CycScalar &other);
    CycScalar &operator*=(const CycScalar &other);

    friend bool operator==(const CycScalar &a, const CycScalar &b);
    friend bool operator!=(const CycScalar &a, const CycScalar &b) { return !(a == b); }

   private:
    CycScalar(int conductor, std::vector<Rational> canonical);
    void refresh_flags();

    int conductor_;
    std::vector<Rational> coeffs_;
    bool zero_;
    bool rational_;
};

std::ostream &operator<<(std::ostream &out, const CycScalar &value);

}  // namespace mubkit

#endif  // MUBKIT_EXACT_SCALAR_H
