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

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

using IntPoly = std::vector<mpz_class>;

// Exact quotient of num by a monic divisor. Throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly num, const IntPoly &den) {
    size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        throw InternalError("cyclotomic division: dividend degree too small");
    }
    IntPoly quot(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
        mpz_class c = num[i];
        if (c == 0) {
            continue;
        }
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; j++) {
            num[i - dd + j] -= c * den[j];
        }
    }
    for (const auto &r : num) {
        if (r != 0) {
            throw InternalError("cyclotomic division left a remainder");
        }
    }
    return quot;
}

// Phi_n together with the reductions of x^e mod Phi_n for every e in [0, n).
// x^n = 1 modulo Phi_n, so any exponent can be folded into this table.
struct CyclotomicRing {
    int n = 1;
    int phi = 1;
    IntPoly poly;
    std::vector<IntPoly> powers;
};

CyclotomicRing build_ring(int n) {
    CyclotomicRing ring;
    ring.n = n;
    ring.poly = cyclotomic_polynomial(n);
    ring.phi = static_cast<int>(ring.poly.size()) - 1;
    ring.powers.resize(n);
    IntPoly cur(ring.phi, 0);
    cur[0] = 1;
    for (int e = 0; e < n; e++) {
        ring.powers[e] = cur;
        // cur <- x * cur mod Phi_n
        mpz_class top = cur[ring.phi - 1];
        for (int i = ring.phi - 1; i > 0; i--) {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if (top != 0) {
            for (int i = 0; i < ring.phi; i++) {
                cur[i] -= top * ring.poly[i];
            }
        }
    }
    return ring;
}

const CyclotomicRing &ring_for(int n) {
    thread_local int last_n = 0;
    thread_local const CyclotomicRing *last = nullptr;
    if (n == last_n) {
        return *last;
    }
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicRing>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<CyclotomicRing>(build_ring(n));
    }
    last_n = n;
    last = slot.get();
    return *slot;
}

// Folds a vector indexed by exponents mod n into the canonical power basis.
std::vector<Rational> reduce_group_algebra(const CyclotomicRing &ring, std::vector<Rational> g) {
    std::vector<Rational> out(ring.phi);
    for (int i = 0; i < ring.phi && i < static_cast<int>(g.size()); i++) {
        out[i] = std::move(g[i]);
    }
    for (int e = ring.phi; e < static_cast<int>(g.size()); e++) {
        if (sgn(g[e]) == 0) {
            continue;
        }
        const IntPoly &p = ring.powers[e];
        for (int i = 0; i < ring.phi; i++) {
            if (p[i] != 0) {
                out[i] += g[e] * p[i];
            }
        }
    }
    return out;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

std::string rational_to_string(const Rational &r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty rational");
    }
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_since_slash = false;
    for (size_t i = start; i < text.size(); i++) {
        char c = text[i];
        if (c == '/' && !seen_slash && digit_since_slash) {
            seen_slash = true;
            digit_since_slash = false;
        } else if (c >= '0' && c <= '9') {
            digit_since_slash = true;
        } else {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
    }
    if (!digit_since_slash) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
}

int euler_phi(int n) {
    if (n < 1) {
        throw std::invalid_argument("euler_phi requires n >= 1");
    }
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; p++) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

const std::vector<mpz_class> &cyclotomic_polynomial(int n) {
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_polynomial requires n >= 1");
    }
    static std::mutex mu;
    static std::map<int, std::unique_ptr<IntPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) {
            return *it->second;
        }
    }
    // Divisor polynomials are computed outside the lock; recursion re-enters.
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int m = 1; m < n; m++) {
        if (n % m == 0) {
            p = divide_exact(std::move(p), cyclotomic_polynomial(m));
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<IntPoly>(std::move(p));
    }
    return *slot;
}

CycScalar::CycScalar() : conductor_(1), coeffs_(1), zero_(true), rational_(true) {}

CycScalar::CycScalar(long value) : CycScalar(Rational(value)) {}

CycScalar::CycScalar(Rational value) : conductor_(1), coeffs_{std::move(value)} {
    coeffs_[0].canonicalize();
    refresh_flags();
}

CycScalar::CycScalar(int conductor, std::vector<Rational> canonical)
    : conductor_(conductor), coeffs_(std::move(canonical)) {
    refresh_flags();
}

void CycScalar::refresh_flags() {
    rational_ = true;
    for (size_t i = 1; i < coeffs_.size(); i++) {
        if (sgn(coeffs_[i]) != 0) {
            rational_ = false;
            break;
        }
    }
    zero_ = rational_ && sgn(coeffs_[0]) == 0;
}

CycScalar CycScalar::root_of_unity(int n, long long e) {
    if (n < 1) {
        throw std::invalid_argument("root_of_unity requires N >= 1");
    }
    const CyclotomicRing &ring = ring_for(n);
    long long r = e % n;
    if (r < 0) {
        r += n;
    }
    const IntPoly &p = ring.powers[r];
    std::vector<Rational> coeffs(ring.phi);
    for (int i = 0; i < ring.phi; i++) {
        coeffs[i] = p[i];
    }
    return CycScalar(n, std::move(coeffs));
}

CycScalar CycScalar::from_coefficients(int conductor, std::vector<Rational> coeffs) {
    if (conductor < 1) {
        throw std::invalid_argument("conductor must be >= 1");
    }
    const CyclotomicRing &ring = ring_for(conductor);
    std::vector<Rational> g(conductor);
    for (size_t i = 0; i < coeffs.size(); i++) {
        coeffs[i].canonicalize();
        g[i % conductor] += coeffs[i];
    }
    return CycScalar(conductor, reduce_group_algebra(ring, std::move(g)));
}

CycScalar CycScalar::parse(std::string_view text) {
    constexpr std::string_view head = "conductor:";
    constexpr std::string_view mid = ";coeffs:";
    if (text.substr(0, head.size()) != head) {
        throw ParseError("scalar must start with 'conductor:'");
    }
    size_t sep = text.find(mid);
    if (sep == std::string_view::npos) {
        throw ParseError("scalar is missing ';coeffs:'");
    }
    std::string_view ntext = text.substr(head.size(), sep - head.size());
    if (ntext.empty() || ntext.size() > 6) {
        throw ParseError("bad conductor in scalar");
    }
    int n = 0;
    for (char c : ntext) {
        if (c < '0' || c > '9') {
            throw ParseError("bad conductor in scalar");
        }
        n = n * 10 + (c - '0');
    }
    if (n < 1) {
        throw ParseError("conductor must be positive");
    }
    std::vector<Rational> coeffs;
    std::string_view rest = text.substr(sep + mid.size());
    while (true) {
        size_t comma = rest.find(',');
        coeffs.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    if (static_cast<int>(coeffs.size()) != euler_phi(n)) {
        throw ParseError("scalar with conductor " + std::to_string(n) + " needs exactly " +
                         std::to_string(euler_phi(n)) + " coefficients");
    }
    return CycScalar(n, std::move(coeffs));
}

std::optional<Rational> CycScalar::as_rational() const {
    if (!rational_) {
        return std::nullopt;
    }
    return coeffs_[0];
}

std::complex<double> CycScalar::to_complex() const {
    long double re = 0;
    long double im = 0;
    const long double two_pi = 6.283185307179586476925286766559005768L;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        long double c = coeffs_[i].get_d();
        long double angle = two_pi * static_cast<long double>(i) / conductor_;
        re += c * cosl(angle);
        im += c * sinl(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycScalar::to_string() const {
    std::string out = "conductor:" + std::to_string(conductor_) + ";coeffs:";
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (i) {
            out += ',';
        }
        out += rational_to_string(coeffs_[i]);
    }
    return out;
}

CycScalar CycScalar::lifted(int multiple) const {
    if (multiple < 1 || multiple % conductor_ != 0) {
        throw std::invalid_argument("lift target must be a multiple of the conductor");
    }
    if (multiple == conductor_) {
        return *this;
    }
    const CyclotomicRing &ring = ring_for(multiple);
    int step = multiple / conductor_;
    std::vector<Rational> g(multiple);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        g[i * step] = coeffs_[i];
    }
    return CycScalar(multiple, reduce_group_algebra(ring, std::move(g)));
}

CycScalar CycScalar::galois(int k) const {
    if (std::gcd(k, conductor_) != 1) {
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    }
    if (rational_) {
        return *this;
    }
    const CyclotomicRing &ring = ring_for(conductor_);
    long long kk = ((k % conductor_) + conductor_) % conductor_;
    std::vector<Rational> g(conductor_);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (sgn(coeffs_[i]) != 0) {
            g[(i * kk) % conductor_] += coeffs_[i];
        }
    }
    return CycScalar(conductor_, reduce_group_algebra(ring, std::move(g)));
}

CycScalar CycScalar::conjugate() const {
    if (rational_) {
        return *this;
    }
    return galois(conductor_ - 1);
}

CycScalar CycScalar::magnitude_squared() const { return *this * conjugate(); }

CycScalar CycScalar::inverse() const {
    if (zero_) {
        throw std::domain_error("inverse of zero");
    }
    if (rational_) {
        std::vector<Rational> c(coeffs_.size());
        c[0] = Rational(1) / coeffs_[0];
        return CycScalar(conductor_, std::move(c));
    }
    // a^{-1} = (product of the other Galois conjugates) / N(a), N(a) rational.
    CycScalar others(1L);
    for (int k = 2; k < conductor_; k++) {
        if (std::gcd(k, conductor_) == 1) {
            others *= galois(k);
        }
    }
    CycScalar norm = *this * others;
    auto q = norm.as_rational();
    if (!q) {
        throw InternalError("field norm is not rational");
    }
    return others.scaled(1 / *q);
}

CycScalar CycScalar::scaled(const Rational &factor) const {
    std::vector<Rational> c(coeffs_.size());
    if (sgn(factor) != 0) {
        for (size_t i = 0; i < c.size(); i++) {
            if (sgn(coeffs_[i]) != 0) {
                c[i] = coeffs_[i] * factor;
            }
        }
    }
    return CycScalar(conductor_, std::move(c));
}

CycScalar CycScalar::operator-() const { return scaled(Rational(-1)); }

CycScalar operator+(const CycScalar &a, const CycScalar &b) {
    if (b.rational_ || a.conductor_ == b.conductor_) {
        if (a.conductor_ == b.conductor_) {
            std::vector<Rational> c(a.coeffs_.size());
            for (size_t i = 0; i < c.size(); i++) {
                c[i] = a.coeffs_[i] + b.coeffs_[i];
            }
            return CycScalar(a.conductor_, std::move(c));
        }
        std::vector<Rational> c = a.coeffs_;
        c[0] += b.coeffs_[0];
        return CycScalar(a.conductor_, std::move(c));
    }
    if (a.rational_) {
        return b + a;
    }
    int m = lcm_int(a.conductor_, b.conductor_);
    return a.lifted(m) + b.lifted(m);
}

CycScalar operator-(const CycScalar &a, const CycScalar &b) { return a + (-b); }

CycScalar operator*(const CycScalar &a, const CycScalar &b) {
    if (a.zero_ || b.zero_) {
        return CycScalar(a.conductor_ >= b.conductor_ ? a.conductor_ : b.conductor_,
                         std::vector<Rational>(euler_phi(std::max(a.conductor_, b.conductor_))));
    }
    if (b.rational_) {
        return a.scaled(b.coeffs_[0]);
    }
    if (a.rational_) {
        return b.scaled(a.coeffs_[0]);
    }
    if (a.conductor_ != b.conductor_) {
        int m = lcm_int(a.conductor_, b.conductor_);
        return a.lifted(m) * b.lifted(m);
    }
    const int n = a.conductor_;
    const CyclotomicRing &ring = ring_for(n);
    std::vector<Rational> g(n);
    Rational t;
    for (int i = 0; i < ring.phi; i++) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (int j = 0; j < ring.phi; j++) {
            if (sgn(b.coeffs_[j]) == 0) {
                continue;
            }
            int e = i + j;
            if (e >= n) {
                e -= n;
            }
            mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            g[e] += t;
        }
    }
    return CycScalar(n, reduce_group_algebra(ring, std::move(g)));
}

CycScalar operator/(const CycScalar &a, const CycScalar &b) { return a * b.inverse(); }

CycScalar &CycScalar::operator+=(const CycScalar &other) { return *this = *this + other; }
CycScalar &CycScalar::operator-=(const CycScalar &other) { return *this = *this - other; }
CycScalar &CycScalar::operator*=(const CycScalar &other) { return *this = *this * other; }

bool operator==(const CycScalar &a, const CycScalar &b) {
    if (a.conductor_ == b.conductor_) {
        return a.coeffs_ == b.coeffs_;
    }
    if (a.rational_ || b.rational_) {
        return a.rational_ && b.rational_ && a.coeffs_[0] == b.coeffs_[0];
    }
    int m = lcm_int(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::ostream &operator<<(std::ostream &out, const CycScalar &value) { return out << value.to_string(); }

}  // namespace mubkit
