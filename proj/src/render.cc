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

#include "mubkit/render.h"

#include <optional>
#include <sstream>

namespace mubkit {

namespace {

// Symbol for zeta_{2d}^e = q^(e/2), e in (0, 2d).
std::string q_symbol(long long e) {
    if (e % 2 == 0) {
        long long k = e / 2;
        return k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(e) + "/2)";
}

std::string term(const Rational &r, const std::string &symbol) {
    if (r == 1) {
        return symbol;
    }
    if (r == -1) {
        return "-" + symbol;
    }
    return rational_to_string(r) + "*" + symbol;
}

std::string join_terms(const std::vector<std::string> &terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); i++) {
        const std::string &t = terms[i];
        if (i == 0) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

bool perfect_square(const mpz_class &n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string q_header(int d) { return "# q = exp(2*pi*i/" + std::to_string(d) + ")"; }

std::string render_scalar(const CycScalar &x, int d) {
    if (x.is_zero()) {
        return "0";
    }
    if (auto r = x.as_rational()) {
        return rational_to_string(*r);
    }
    if (auto r = (x * CycScalar::root_of_unity(4, 3)).as_rational()) {
        return term(*r, "i");
    }
    // r * zeta_{2d}^e with r > 0, preferring integer powers of q.
    const int n2 = 2 * d;
    std::optional<std::string> half_power;
    for (int e = 1; e < n2; e++) {
        auto r = (x * CycScalar::root_of_unity(n2, -e)).as_rational();
        if (!r || sgn(*r) < 0) {
            continue;
        }
        if (e % 2 == 0) {
            return term(*r, q_symbol(e));
        }
        if (!half_power) {
            half_power = term(*r, q_symbol(e));
        }
    }
    if (half_power) {
        return *half_power;
    }
    const int n = x.conductor();
    std::vector<std::string> terms;
    const auto &c = x.coefficients();
    for (size_t i = 0; i < c.size(); i++) {
        if (sgn(c[i]) == 0) {
            continue;
        }
        if (i == 0) {
            terms.push_back(rational_to_string(c[i]));
        } else if (n2 % n == 0) {
            terms.push_back(term(c[i], q_symbol(static_cast<long long>(i) * (n2 / n))));
        } else {
            terms.push_back(term(c[i], "zeta" + std::to_string(n) + "^" + std::to_string(i)));
        }
    }
    return join_terms(terms);
}

std::string render_scale(const Rational &scale_sq) {
    const mpz_class &p = scale_sq.get_num();
    const mpz_class &q = scale_sq.get_den();
    bool p_sq = perfect_square(p);
    bool q_sq = perfect_square(q);
    if (p_sq && q_sq) {
        Rational s(sqrt(p), sqrt(q));
        return s == 1 ? "" : rational_to_string(s);
    }
    if (p_sq) {
        return mpz_class(sqrt(p)).get_str() + "/√" + q.get_str();
    }
    if (q_sq) {
        mpz_class root_q = sqrt(q);
        return root_q == 1 ? "√" + p.get_str() : "√" + p.get_str() + "/" + root_q.get_str();
    }
    return "√(" + rational_to_string(scale_sq) + ")";
}

std::string render_state(const StateVector &v, int d) {
    std::string body = "(";
    for (int k = 0; k < v.dim(); k++) {
        if (k) {
            body += ", ";
        }
        body += render_scalar(v.entries()[k], d);
    }
    body += ")";
    std::string scale = render_scale(v.scale_sq());
    return scale.empty() ? body : scale + " " + body;
}

std::string render_basis(const Basis &b, int d) {
    std::ostringstream out;
    out << b.label() << " (dim " << b.dim() << ")\n";
    for (int i = 0; i < b.size(); i++) {
        out << "  [" << i << "] " << render_state(b[i], d);
        if (!b.tags().empty()) {
            out << "  # " << b.tags()[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string render_matrix(const OperatorMatrix &m, int d) {
    std::ostringstream out;
    for (int r = 0; r < m.dim(); r++) {
        out << "[";
        for (int c = 0; c < m.dim(); c++) {
            if (c) {
                out << ", ";
            }
            out << render_scalar(m(r, c), d);
        }
        out << "]\n";
    }
    return out.str();
}

std::string render_report(const VerificationReport &r) {
    std::ostringstream out;
    out << r.subject << " d=" << r.dim << ": " << pass_fail(r.passed()) << "\n";
    for (const auto &c : r.checks) {
        out << "  " << pass_fail(c.passed) << "  " << c.check << " (" << (c.exact ? "exact" : "float");
        if (c.max_residual) {
            out << ", max residual " << *c.max_residual;
        }
        out << ")";
        if (!c.detail.empty()) {
            out << "  " << c.detail;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_certificate(const MubCertificate &c) {
    std::ostringstream out;
    out << "certificate dim=" << c.dim << " bases=" << c.basis_labels.size()
        << " maximal=" << (c.maximal ? "yes" : "no") << "\n";
    for (const auto &p : c.pairs) {
        out << "  " << c.basis_labels[p.a] << " vs " << c.basis_labels[p.b] << ": " << verdict_name(p.verdict);
        if (p.witness) {
            auto r = p.witness->overlap_sq.as_rational();
            out << " (witness u=" << p.witness->u << " v=" << p.witness->v
                << " |<u|v>|^2 = " << (r ? rational_to_string(*r) : p.witness->overlap_sq.to_string())
                << ", expected 1/" << c.dim << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string render_group_report(const GroupReport &r) {
    std::ostringstream out;
    out << "pauli group d=" << r.d << ": " << pass_fail(r.passed()) << "\n";
    out << "  order: " << r.order << "\n";
    out << "  closure: " << pass_fail(r.closure) << "\n";
    out << "  identity: " << pass_fail(r.identity) << "\n";
    out << "  inverses: " << pass_fail(r.inverses) << "\n";
    out << "  associativity: " << pass_fail(r.associativity) << " (" << r.associativity_triples << " triples)\n";
    out << "  unitary: " << pass_fail(r.unitary) << "\n";
    out << "  monomial: " << pass_fail(r.monomial) << "\n";
    out << "  faithful: " << pass_fail(r.faithful) << " (" << r.sampled_pairs << " pairs"
        << (r.exhaustive_pairs ? ", exhaustive" : ", sampled") << ")\n";
    out << "  center contains phases: " << pass_fail(r.center_contains_phases) << "\n";
    out << "  max element order: " << r.max_matrix_order
        << (r.orders_divide_bound ? " (all orders divide " : " (some order does not divide ")
        << (r.d % 2 == 0 ? 2 * r.d : r.d) << ")\n";
    return out.str();
}

std::string render_tangle(const TangleResult &t) {
    std::ostringstream out;
    out << "|det A|^2 = " << (t.det_abs_sq ? rational_to_string(*t.det_abs_sq) : std::string("(irrational)"))
        << ", |det A| ~ " << t.det_abs_float << ", class " << tangle_class_name(t.classification);
    return out.str();
}

std::string render_classification(const BasisClassification &c) {
    std::ostringstream out;
    out << c.label << ": " << c.summary << "\n";
    for (size_t i = 0; i < c.vectors.size(); i++) {
        out << "  [" << i << "] " << render_tangle(c.vectors[i]) << "\n";
    }
    return out.str();
}

}  // namespace mubkit
