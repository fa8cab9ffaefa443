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

// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// wall clock budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "golden.h"
#include "mubkit/entanglement.h"
#include "mubkit/mub.h"
#include "mubkit/operators.h"
#include "mubkit/pauli_group.h"

using namespace mubkit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool matches(int d, const Basis &b, const golden::Table &t) {
    if (b.label() != t.label || b.size() != static_cast<int>(t.columns.size())) {
        return false;
    }
    for (int i = 0; i < b.size(); i++) {
        if (b[i] != golden::column(d, t, i)) {
            return false;
        }
    }
    return true;
}

Outcome golden_d2() {
    Outcome o;
    o.expect(matches(2, computational_basis(2), golden::d2()[0]), "B_2 columns");
    o.expect(matches(2, basis_B0a(2, 0), golden::d2()[1]), "B_00 columns");
    o.expect(matches(2, basis_B0a(2, 1), golden::d2()[2]), "B_01 columns");
    o.expect(v0a_matrix(2, 0) == golden::matrix(2, golden::kSigmaX), "V_00 = sigma_x");
    o.expect(v0a_matrix(2, 1) == golden::matrix(2, golden::kMinusISigmaY), "V_01 = -i sigma_y");
    o.expect(z_matrix(2) == golden::matrix(2, golden::kSigmaZ), "Z = sigma_z");
    return o;
}

Outcome golden_d3() {
    Outcome o;
    std::vector<Basis> bases = {computational_basis(3), basis_B0a(3, 0), basis_B0a(3, 1), basis_B0a(3, 2)};
    for (size_t i = 0; i < bases.size(); i++) {
        o.expect(matches(3, bases[i], golden::d3()[i]), golden::d3()[i].label + " columns");
    }
    auto cert = certify_unbiased(bases);
    o.expect(cert.pairs.size() == 6 && cert.all_unbiased() && cert.maximal, "4 pairwise unbiased bases");
    return o;
}

Outcome golden_d4() {
    Outcome o;
    auto t = two_qubit_mub_set();
    o.expect(t.bases.size() == 5, "five bases");
    for (size_t i = 0; i < t.bases.size() && i < 5; i++) {
        o.expect(matches(4, t.bases[i], golden::d4()[i]), golden::d4()[i].label + " columns");
    }
    o.expect(t.certificate.pairs.size() == 10 && t.certificate.all_unbiased() && t.certificate.maximal,
             "5 pairwise unbiased bases");
    return o;
}

Outcome prime_maximality() {
    Outcome o;
    for (int p : {2, 3, 5, 7, 11, 13}) {
        auto s = mub_set(p);
        std::string tag = "p = " + std::to_string(p);
        o.expect(s.bases.size() == static_cast<size_t>(p + 1), tag + ": p + 1 bases");
        o.expect(s.certificate.maximal, tag + ": maximal certificate");
        // Recount every cross overlap directly.
        for (size_t i = 0; i < s.bases.size(); i++) {
            for (size_t j = i + 1; j < s.bases.size(); j++) {
                for (int u = 0; u < p; u++) {
                    for (int v = 0; v < p; v++) {
                        auto m = inner(s.bases[i][u], s.bases[j][v]).magnitude_squared_rational();
                        o.expect(m == Rational(1, p), tag + ": overlap != 1/p");
                    }
                }
            }
        }
    }
    return o;
}

Outcome three_mubs() {
    Outcome o;
    for (int d = 2; d <= 12; d++) {
        auto c = certify_unbiased({computational_basis(d), basis_B0a(d, 0), basis_B0a(d, 1)});
        o.expect(c.pairs.size() == 3 && c.all_unbiased(), "d = " + std::to_string(d));
    }
    return o;
}

Outcome composite_witness() {
    Outcome o;
    std::vector<Basis> bases;
    for (int a = 0; a < 4; a++) {
        bases.push_back(basis_B0a(4, a));
    }
    bases.push_back(computational_basis(4));
    auto c = certify_unbiased(bases);
    int failed = 0;
    for (const auto &p : c.pairs) {
        if (p.verdict == Verdict::kFailed) {
            failed++;
            o.expect(p.witness.has_value(), "failed pair without witness");
            if (p.witness) {
                // The witness must really be biased: recompute its overlap.
                auto m = inner(bases[p.a][p.witness->u], bases[p.b][p.witness->v]).magnitude_squared();
                o.expect(m == p.witness->overlap_sq && m != CycScalar(Rational(1, 4)), "witness overlap");
            }
        }
    }
    o.expect(failed >= 1, "no failed pair");
    o.expect(!c.all_unbiased(), "certificate claims unbiased");
    return o;
}

Outcome weyl() {
    Outcome o;
    for (int d = 1; d <= 12; d++) {
        auto r = weyl_report(d);
        for (const auto &c : r.checks) {
            o.expect(c.passed, "d = " + std::to_string(d) + ": " + c.check);
        }
    }
    return o;
}

Outcome su2() {
    Outcome o;
    double worst = 0;
    for (int d = 1; d <= 50; d++) {
        for (int a = 0; a < d; a++) {
            auto r = su2_report(d, a, 1e-12);
            for (const auto &c : r.report.checks) {
                o.expect(c.passed, "d = " + std::to_string(d) + " a = " + std::to_string(a) + ": " + c.check);
                if (c.max_residual) {
                    worst = std::max(worst, *c.max_residual);
                }
            }
            for (int k = 0; k < d; k++) {
                o.expect(2 * r.jz_diagonal[k] == d - 1 - 2 * k, "j_z diagonal");
            }
        }
    }
    if (o.ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max residual %.3g", worst);
        o.detail = buf;
    }
    return o;
}

Outcome pauli() {
    Outcome o;
    for (int d = 2; d <= 7; d++) {
        auto r = enumerate_group(d);
        std::string tag = "d = " + std::to_string(d);
        o.expect(r.order == static_cast<long long>(d) * d * d, tag + ": order");
        o.expect(r.closure && r.inverses && r.unitary, tag + ": axioms");
        o.expect(r.faithful, tag + ": compose vs matrix product");
        if (d <= 4) {
            o.expect(r.exhaustive_pairs && r.sampled_pairs == static_cast<long long>(r.order) * r.order,
                     tag + ": all pairs");
        }
    }
    return o;
}

Outcome entanglement() {
    Outcome o;
    auto t = two_qubit_mub_set();
    const char *expected[] = {"all-none", "all-none", "all-none", "all-maximal", "all-maximal"};
    for (int i = 1; i < 5; i++) {
        auto c = classify_basis(t.bases[i], 2);
        o.expect(c.summary == expected[i], t.bases[i].label() + " summary");
        for (const auto &v : c.vectors) {
            if (i >= 3) {
                o.expect(v.det_abs_sq == Rational(1, 4), t.bases[i].label() + " |det A|^2");
            }
        }
    }
    std::mt19937_64 rng(2026);
    std::normal_distribution<double> g;
    for (int d : {2, 3}) {
        double bound = std::pow(static_cast<double>(d), -d / 2.0) + 1e-9;
        for (int trial = 0; trial < 10000; trial++) {
            std::vector<std::complex<double>> v(d * d);
            double norm = 0;
            for (auto &x : v) {
                x = {g(rng), g(rng)};
                norm += std::norm(x);
            }
            for (auto &x : v) {
                x /= std::sqrt(norm);
            }
            o.expect(determinant_abs(v, d) <= bound, "random vector above the bound");
        }
    }
    return o;
}

Outcome eigen_structure() {
    Outcome o;
    for (int d = 1; d <= 12; d++) {
        for (int a = 0; a < d; a++) {
            std::vector<CycScalar> values;
            for (int alpha = 0; alpha < d; alpha++) {
                auto e = eigen_check(d, a, alpha);
                long long twice = (static_cast<long long>(d - 1) * a - 2 * alpha) % (2 * d);
                o.expect(e.passed, "eigenvector");
                o.expect(e.eigenvalue == CycScalar::root_of_unity(2 * d, twice), "eigenvalue");
                values.push_back(e.eigenvalue);
            }
            bool distinct = true;
            for (size_t i = 0; i < values.size(); i++) {
                for (size_t j = i + 1; j < values.size(); j++) {
                    distinct = distinct && values[i] != values[j];
                }
            }
            o.expect(distinct, "degenerate spectrum");
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden d=2 tables", 1, golden_d2},
        {2, "golden d=3 tables and 4 unbiased bases", 1, golden_d3},
        {3, "golden two-qubit tables and 5 unbiased bases", 1, golden_d4},
        {4, "prime maximality, overlaps exactly 1/p for p <= 13", 30, prime_maximality},
        {5, "B_d, B_00, B_01 unbiased for d = 2..12", 10, three_mubs},
        {6, "composite d = 4 failure with exact witness", 1, composite_witness},
        {7, "Weyl relations for d <= 12", 5, weyl},
        {8, "su(2) polar decomposition for d <= 50", 30, su2},
        {9, "Pauli group order d^3 and axioms for d = 2..7", 60, pauli},
        {10, "two-qubit entanglement classes and |det A| bound", 1, entanglement},
        {11, "v_0a eigen-structure for d <= 12", 10, eigen_structure},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.budget_s;
        bool pass = o.ok && in_time;
        failures += !pass;
        std::string detail = in_time ? o.detail : std::string("over budget") + (o.detail.empty() ? "" : "; " + o.detail);
        std::printf("[%s] %2d %s (%.3f s of %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                    detail.empty() ? "" : ": ", detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
