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

#include "mubkit/mubkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mubkit/entanglement.h"
#include "mubkit/errors.h"
#include "mubkit/mub.h"
#include "mubkit/operators.h"
#include "mubkit/pauli_group.h"
#include "mubkit/render.h"
#include "mubkit/serialize.h"

using namespace mubkit;

struct mubkit_scalar {
    CycScalar value;
};

struct mubkit_state {
    StateVector value;
};

struct mubkit_basis_set {
    std::vector<Basis> bases;
    std::optional<MubSet> mub;
    std::optional<TwoQubitMubs> two_qubit;
    std::optional<MubCertificate> certificate;
};

struct mubkit_operator {
    std::variant<OperatorMatrix, RadicalDiagonal> value;
};

struct mubkit_report {
    std::variant<VerificationReport, Su2Report, MubCertificate, GroupReport, BasisClassification, TangleResult> value;
};

namespace {

thread_local std::string last_error;

struct NullArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

mubkit_status fail(mubkit_status status, const char *what) {
    last_error = what;
    return status;
}

template <typename F>
mubkit_status guarded(F &&body) noexcept {
    try {
        body();
        last_error.clear();
        return MUBKIT_OK;
    } catch (const NullArgument &e) {
        return fail(MUBKIT_ERR_NULL_POINTER, e.what());
    } catch (const IndexError &e) {
        return fail(MUBKIT_ERR_OUT_OF_RANGE, e.what());
    } catch (const DimensionMismatch &e) {
        return fail(MUBKIT_ERR_DIMENSION_MISMATCH, e.what());
    } catch (const ParseError &e) {
        return fail(MUBKIT_ERR_PARSE, e.what());
    } catch (const nlohmann::json::exception &e) {
        return fail(MUBKIT_ERR_PARSE, e.what());
    } catch (const SizeLimitError &e) {
        return fail(MUBKIT_ERR_SIZE_LIMIT, e.what());
    } catch (const InternalError &e) {
        return fail(MUBKIT_ERR_INTERNAL, e.what());
    } catch (const std::out_of_range &e) {
        return fail(MUBKIT_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(MUBKIT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(MUBKIT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::length_error &e) {
        return fail(MUBKIT_ERR_SIZE_LIMIT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(MUBKIT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(MUBKIT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MUBKIT_ERR_INTERNAL, "unknown error");
    }
}

template <typename T>
const T &deref(const T *p, const char *name) {
    if (p == nullptr) {
        throw NullArgument(std::string(name) + " is null");
    }
    return *p;
}

template <typename T>
void check_out(T **out) {
    if (out == nullptr) {
        throw NullArgument("output pointer is null");
    }
}

template <typename T>
void check_out(T *out) {
    if (out == nullptr) {
        throw NullArgument("output pointer is null");
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

template <typename Op>
mubkit_status binary_scalar(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out, Op op) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_scalar{op(deref(a, "a").value, deref(b, "b").value)};
    });
}

const Basis &basis_at(const mubkit_basis_set &set, int index) {
    if (index < 0 || index >= static_cast<int>(set.bases.size())) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    return set.bases[index];
}

std::string render_set_text(const mubkit_basis_set &set) {
    int d = set.bases.empty() ? 1 : set.bases.front().dim();
    std::string out = q_header(d) + "\n";
    for (const auto &b : set.bases) {
        out += render_basis(b, d);
    }
    if (set.two_qubit) {
        for (size_t i = 0; i < set.two_qubit->bases.size(); i++) {
            const auto &eig = set.two_qubit->eigenvalues[i];
            if (eig.empty()) {
                continue;
            }
            out += "eigenvalues " + set.two_qubit->bases[i].label() + ":";
            for (const auto &e : eig) {
                out += " " + render_scalar(e, d);
            }
            out += "\n";
        }
    }
    if (set.certificate) {
        out += render_certificate(*set.certificate);
    }
    if (set.mub && set.mub->maximal_unknown_by_this_method) {
        out += "note: d is not prime; maximality is not decided by this construction\n";
    }
    return out;
}

Json set_json(const mubkit_basis_set &set) {
    if (set.two_qubit) {
        return to_json(*set.two_qubit);
    }
    if (set.mub) {
        return to_json(*set.mub);
    }
    if (set.bases.size() == 1 && !set.certificate) {
        return to_json(set.bases.front());
    }
    Json bases = Json::array();
    for (const auto &b : set.bases) {
        bases.push_back(to_json(b));
    }
    Json j;
    j["bases"] = std::move(bases);
    if (set.certificate) {
        j["certificate"] = to_json(*set.certificate);
    }
    return j;
}

std::string radical_text(const RadicalDiagonal &h) {
    std::string out = "h = diag(";
    for (size_t k = 0; k < h.radicands.size(); k++) {
        if (k) {
            out += ", ";
        }
        long long n = h.radicands[k];
        long long r = 0;
        while ((r + 1) * (r + 1) <= n) {
            r++;
        }
        out += r * r == n ? std::to_string(r) : "√" + std::to_string(n);
    }
    return out + ")\n";
}

struct ReportText {
    std::string operator()(const VerificationReport &r) const { return render_report(r); }
    std::string operator()(const Su2Report &r) const {
        std::string out = render_report(r.report);
        out += "  a = " + std::to_string(r.a) + ", j_z = diag(";
        for (size_t i = 0; i < r.jz_diagonal.size(); i++) {
            out += (i ? ", " : "") + rational_to_string(r.jz_diagonal[i]);
        }
        return out + ")\n";
    }
    std::string operator()(const MubCertificate &c) const { return render_certificate(c); }
    std::string operator()(const GroupReport &r) const { return render_group_report(r); }
    std::string operator()(const BasisClassification &c) const { return render_classification(c); }
    std::string operator()(const TangleResult &t) const { return render_tangle(t) + "\n"; }
};

struct ReportPassed {
    bool operator()(const VerificationReport &r) const { return r.passed(); }
    bool operator()(const Su2Report &r) const { return r.report.passed(); }
    bool operator()(const MubCertificate &c) const { return c.all_unbiased(); }
    bool operator()(const GroupReport &r) const { return r.passed(); }
    bool operator()(const BasisClassification &) const { return true; }
    bool operator()(const TangleResult &) const { return true; }
};

}  // namespace

extern "C" {

const char *mubkit_version(void) { return "0.1.0"; }

const char *mubkit_status_name(mubkit_status status) {
    switch (status) {
        case MUBKIT_OK:
            return "ok";
        case MUBKIT_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case MUBKIT_ERR_OUT_OF_RANGE:
            return "out of range";
        case MUBKIT_ERR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case MUBKIT_ERR_PARSE:
            return "parse error";
        case MUBKIT_ERR_SIZE_LIMIT:
            return "size limit exceeded";
        case MUBKIT_ERR_INTERNAL:
            return "internal error";
        case MUBKIT_ERR_NULL_POINTER:
            return "null pointer";
    }
    return "unknown status";
}

const char *mubkit_last_error(void) { return last_error.c_str(); }

void mubkit_string_free(char *text) { std::free(text); }

// ---- scalars ----

mubkit_status mubkit_scalar_root_of_unity(int n, long long e, mubkit_scalar **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_scalar{CycScalar::root_of_unity(n, e)};
    });
}

mubkit_status mubkit_scalar_parse(const char *text, mubkit_scalar **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_scalar{CycScalar::parse(&deref(text, "text"))};
    });
}

mubkit_status mubkit_scalar_add(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out) {
    return binary_scalar(a, b, out, [](const CycScalar &x, const CycScalar &y) { return x + y; });
}

mubkit_status mubkit_scalar_sub(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out) {
    return binary_scalar(a, b, out, [](const CycScalar &x, const CycScalar &y) { return x - y; });
}

mubkit_status mubkit_scalar_mul(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out) {
    return binary_scalar(a, b, out, [](const CycScalar &x, const CycScalar &y) { return x * y; });
}

mubkit_status mubkit_scalar_div(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out) {
    return binary_scalar(a, b, out, [](const CycScalar &x, const CycScalar &y) { return x / y; });
}

mubkit_status mubkit_scalar_conjugate(const mubkit_scalar *a, mubkit_scalar **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_scalar{deref(a, "a").value.conjugate()};
    });
}

mubkit_status mubkit_scalar_equal(const mubkit_scalar *a, const mubkit_scalar *b, int *out) {
    return guarded([&] {
        check_out(out);
        *out = deref(a, "a").value == deref(b, "b").value ? 1 : 0;
    });
}

mubkit_status mubkit_scalar_to_string(const mubkit_scalar *a, char **out) {
    return guarded([&] {
        check_out(out);
        *out = copy_string(deref(a, "a").value.to_string());
    });
}

mubkit_status mubkit_scalar_to_complex(const mubkit_scalar *a, double *re, double *im) {
    return guarded([&] {
        check_out(re);
        check_out(im);
        auto z = deref(a, "a").value.to_complex();
        *re = z.real();
        *im = z.imag();
    });
}

void mubkit_scalar_free(mubkit_scalar *a) { delete a; }

// ---- states ----

mubkit_status mubkit_state_ket(int d, int k, mubkit_state **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_state{ket(d, k)};
    });
}

mubkit_status mubkit_state_mub_vector(int d, int a, int alpha, mubkit_state **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_state{mub_vector(d, a, alpha)};
    });
}

mubkit_status mubkit_state_from_json(const char *json, mubkit_state **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_state{state_from_json(Json::parse(&deref(json, "json")))};
    });
}

mubkit_status mubkit_state_tensor(const mubkit_state *u, const mubkit_state *v, mubkit_state **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_state{tensor(deref(u, "u").value, deref(v, "v").value)};
    });
}

mubkit_status mubkit_state_dim(const mubkit_state *s, int *out) {
    return guarded([&] {
        check_out(out);
        *out = deref(s, "state").value.dim();
    });
}

mubkit_status mubkit_state_entry(const mubkit_state *s, int k, mubkit_scalar **out) {
    return guarded([&] {
        check_out(out);
        const StateVector &v = deref(s, "state").value;
        if (k < 0 || k >= v.dim()) {
            throw IndexError("entry index " + std::to_string(k) + " out of range");
        }
        *out = new mubkit_scalar{v[k]};
    });
}

mubkit_status mubkit_state_overlap_sq(const mubkit_state *u, const mubkit_state *v, char **out) {
    return guarded([&] {
        check_out(out);
        CycScalar m = inner(deref(u, "u").value, deref(v, "v").value).magnitude_squared();
        auto r = m.as_rational();
        *out = copy_string(r ? rational_to_string(*r) : m.to_string());
    });
}

mubkit_status mubkit_state_render(const mubkit_state *s, mubkit_format format, char **out) {
    return guarded([&] {
        check_out(out);
        const StateVector &v = deref(s, "state").value;
        if (format == MUBKIT_FORMAT_JSON) {
            *out = copy_string(dump(to_json(v)));
        } else {
            *out = copy_string(q_header(v.dim()) + "\n" + render_state(v, v.dim()) + "\n");
        }
    });
}

void mubkit_state_free(mubkit_state *s) { delete s; }

// ---- bases ----

mubkit_status mubkit_basis_b0a(int d, int a, mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_basis_set{{basis_B0a(d, a)}, {}, {}, {}};
    });
}

mubkit_status mubkit_basis_computational(int d, mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_basis_set{{computational_basis(d)}, {}, {}, {}};
    });
}

mubkit_status mubkit_basis_mub_set(int d, mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        MubSet s = mub_set(d);
        *out = new mubkit_basis_set{s.bases, {}, {}, s.certificate};
        (*out)->mub = std::move(s);
    });
}

mubkit_status mubkit_basis_b0a_family(int d, mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        MubSet s = b0a_family(d);
        *out = new mubkit_basis_set{s.bases, {}, {}, s.certificate};
        (*out)->mub = std::move(s);
    });
}

mubkit_status mubkit_basis_two_qubit(mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        TwoQubitMubs t = two_qubit_mub_set();
        *out = new mubkit_basis_set{t.bases, {}, {}, t.certificate};
        (*out)->two_qubit = std::move(t);
    });
}

mubkit_status mubkit_basis_su2_adapted(mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_basis_set{{su2_adapted_basis()}, {}, {}, {}};
    });
}

mubkit_status mubkit_basis_from_json(const char *json, mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_basis_set{{basis_from_json(Json::parse(&deref(json, "json")))}, {}, {}, {}};
    });
}

mubkit_status mubkit_basis_select(const mubkit_basis_set *set, const int *indices, size_t count,
                                  mubkit_basis_set **out) {
    return guarded([&] {
        check_out(out);
        const auto &s = deref(set, "set");
        if (count > 0) {
            deref(indices, "indices");
        }
        std::vector<Basis> picked;
        for (size_t i = 0; i < count; i++) {
            picked.push_back(basis_at(s, indices[i]));
        }
        *out = new mubkit_basis_set{std::move(picked), {}, {}, {}};
    });
}

mubkit_status mubkit_basis_count(const mubkit_basis_set *set, int *out) {
    return guarded([&] {
        check_out(out);
        *out = static_cast<int>(deref(set, "set").bases.size());
    });
}

mubkit_status mubkit_basis_find(const mubkit_basis_set *set, const char *label, int *out) {
    return guarded([&] {
        check_out(out);
        const auto &s = deref(set, "set");
        std::string wanted = &deref(label, "label");
        for (size_t i = 0; i < s.bases.size(); i++) {
            if (s.bases[i].label() == wanted) {
                *out = static_cast<int>(i);
                return;
            }
        }
        throw IndexError("no basis labelled '" + wanted + "'");
    });
}

mubkit_status mubkit_basis_label(const mubkit_basis_set *set, int index, char **out) {
    return guarded([&] {
        check_out(out);
        *out = copy_string(basis_at(deref(set, "set"), index).label());
    });
}

mubkit_status mubkit_basis_vector(const mubkit_basis_set *set, int index, int vector, mubkit_state **out) {
    return guarded([&] {
        check_out(out);
        const Basis &b = basis_at(deref(set, "set"), index);
        if (vector < 0 || vector >= b.size()) {
            throw IndexError("vector index " + std::to_string(vector) + " out of range");
        }
        *out = new mubkit_state{b[vector]};
    });
}

mubkit_status mubkit_basis_certify(const mubkit_basis_set *set, mubkit_report **out) {
    return guarded([&] {
        check_out(out);
        const auto &s = deref(set, "set");
        *out = new mubkit_report{s.certificate ? *s.certificate : certify_unbiased(s.bases)};
    });
}

mubkit_status mubkit_basis_render(const mubkit_basis_set *set, mubkit_format format, char **out) {
    return guarded([&] {
        check_out(out);
        const auto &s = deref(set, "set");
        *out = copy_string(format == MUBKIT_FORMAT_JSON ? dump(set_json(s)) : render_set_text(s));
    });
}

void mubkit_basis_free(mubkit_basis_set *set) { delete set; }

// ---- operators ----

mubkit_status mubkit_operator_v0a(int d, int a, mubkit_operator **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_operator{v0a_matrix(d, a)};
    });
}

mubkit_status mubkit_operator_x(int d, mubkit_operator **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_operator{x_matrix(d)};
    });
}

mubkit_status mubkit_operator_z(int d, mubkit_operator **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_operator{z_matrix(d)};
    });
}

mubkit_status mubkit_operator_h(int d, mubkit_operator **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_operator{h_diagonal(d)};
    });
}

mubkit_status mubkit_operator_render(const mubkit_operator *op, mubkit_format format, char **out) {
    return guarded([&] {
        check_out(out);
        const auto &v = deref(op, "operator").value;
        std::string text;
        if (const auto *m = std::get_if<OperatorMatrix>(&v)) {
            text = format == MUBKIT_FORMAT_JSON ? dump(to_json(*m))
                                                : q_header(m->dim()) + "\n" + render_matrix(*m, m->dim());
        } else {
            const auto &h = std::get<RadicalDiagonal>(v);
            text = format == MUBKIT_FORMAT_JSON ? dump(to_json(h)) : radical_text(h);
        }
        *out = copy_string(text);
    });
}

void mubkit_operator_free(mubkit_operator *op) { delete op; }

// ---- reports ----

mubkit_status mubkit_verify_weyl(int d, mubkit_report **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_report{weyl_report(d)};
    });
}

mubkit_status mubkit_verify_su2(int d, int a, double tolerance, mubkit_report **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_report{su2_report(d, a, tolerance)};
    });
}

mubkit_status mubkit_pauli_group(int d, mubkit_report **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_report{enumerate_group(d)};
    });
}

mubkit_status mubkit_classify_basis(const mubkit_basis_set *set, int index, int factor_d, mubkit_report **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_report{classify_basis(basis_at(deref(set, "set"), index), factor_d)};
    });
}

mubkit_status mubkit_global_tangle(const mubkit_state *state, int factor_d, mubkit_report **out) {
    return guarded([&] {
        check_out(out);
        *out = new mubkit_report{global_tangle(deref(state, "state").value, factor_d)};
    });
}

mubkit_status mubkit_report_passed(const mubkit_report *report, int *out) {
    return guarded([&] {
        check_out(out);
        *out = std::visit(ReportPassed{}, deref(report, "report").value) ? 1 : 0;
    });
}

mubkit_status mubkit_report_render(const mubkit_report *report, mubkit_format format, char **out) {
    return guarded([&] {
        check_out(out);
        const auto &v = deref(report, "report").value;
        if (format == MUBKIT_FORMAT_JSON) {
            *out = copy_string(dump(std::visit([](const auto &r) { return to_json(r); }, v)));
        } else {
            *out = copy_string(std::visit(ReportText{}, v));
        }
    });
}

void mubkit_report_free(mubkit_report *report) { delete report; }

}  // extern "C"
