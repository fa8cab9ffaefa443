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

// Command line front end. Talks to the library only through mubkit.h.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "mubkit/mubkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxDim = 16;

struct CliError {
    int code;
    std::string message;
};

template <typename T, void (*Free)(T *)>
struct Deleter {
    void operator()(T *p) const { Free(p); }
};

using Scalar = std::unique_ptr<mubkit_scalar, Deleter<mubkit_scalar, mubkit_scalar_free>>;
using State = std::unique_ptr<mubkit_state, Deleter<mubkit_state, mubkit_state_free>>;
using BasisSet = std::unique_ptr<mubkit_basis_set, Deleter<mubkit_basis_set, mubkit_basis_free>>;
using Operator = std::unique_ptr<mubkit_operator, Deleter<mubkit_operator, mubkit_operator_free>>;
using Report = std::unique_ptr<mubkit_report, Deleter<mubkit_report, mubkit_report_free>>;

void check(mubkit_status status) {
    if (status == MUBKIT_OK) {
        return;
    }
    // Bad parameters are usage errors; anything else means a computation
    // did not hold up.
    int code = status == MUBKIT_ERR_INTERNAL ? kExitFailed : kExitUsage;
    throw CliError{code, std::string(mubkit_status_name(status)) + ": " + mubkit_last_error()};
}

std::string take(char *text) {
    std::string out(text);
    mubkit_string_free(text);
    return out;
}

struct Options {
    int d = 0;
    int a = -1;
    int alpha = -1;
    std::string format = "text";
    std::string out_path;
    double tolerance = 1e-12;
    bool all_b0a = false;
    std::string basis_name;
    std::string state_path;
    int factor_d = 2;
    std::string op_name;
};

mubkit_format format_of(const Options &o) { return o.format == "json" ? MUBKIT_FORMAT_JSON : MUBKIT_FORMAT_TEXT; }

class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw CliError{kExitUsage, "cannot open '" + path + "' for writing"};
            }
        }
    }
    std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

   private:
    std::ofstream file_;
};

int emit_report(const Options &o, Output &out, const mubkit_report *r) {
    char *text = nullptr;
    check(mubkit_report_render(r, format_of(o), &text));
    out.stream() << take(text);
    int passed = 0;
    check(mubkit_report_passed(r, &passed));
    if (!passed) {
        std::cerr << "verification failed\n";
        return kExitFailed;
    }
    return kExitOk;
}

int emit_set(const Options &o, Output &out, const mubkit_basis_set *set, bool certified) {
    char *text = nullptr;
    check(mubkit_basis_render(set, format_of(o), &text));
    out.stream() << take(text);
    if (!certified) {
        return kExitOk;
    }
    mubkit_report *raw = nullptr;
    check(mubkit_basis_certify(set, &raw));
    Report cert(raw);
    int passed = 0;
    check(mubkit_report_passed(cert.get(), &passed));
    if (!passed) {
        char *w = nullptr;
        check(mubkit_report_render(cert.get(), MUBKIT_FORMAT_TEXT, &w));
        std::cerr << "verification failed: bases are not pairwise unbiased\n" << take(w);
        return kExitFailed;
    }
    return kExitOk;
}

int run_basis(const Options &o, Output &out) {
    if (o.alpha >= 0) {
        if (o.a < 0) {
            throw CliError{kExitUsage, "--alpha requires --a"};
        }
        mubkit_state *raw = nullptr;
        check(mubkit_state_mub_vector(o.d, o.a, o.alpha, &raw));
        State s(raw);
        char *text = nullptr;
        check(mubkit_state_render(s.get(), format_of(o), &text));
        out.stream() << take(text);
        return kExitOk;
    }
    mubkit_basis_set *raw = nullptr;
    check(o.a >= 0 ? mubkit_basis_b0a(o.d, o.a, &raw) : mubkit_basis_computational(o.d, &raw));
    BasisSet set(raw);
    return emit_set(o, out, set.get(), false);
}

int run_mub_set(const Options &o, Output &out) {
    mubkit_basis_set *raw = nullptr;
    check(o.all_b0a ? mubkit_basis_b0a_family(o.d, &raw) : mubkit_basis_mub_set(o.d, &raw));
    BasisSet set(raw);
    return emit_set(o, out, set.get(), true);
}

int run_two_qubit(const Options &o, Output &out) {
    mubkit_basis_set *raw = nullptr;
    check(mubkit_basis_two_qubit(&raw));
    BasisSet set(raw);
    return emit_set(o, out, set.get(), true);
}

int run_verify_weyl(const Options &o, Output &out) {
    mubkit_report *raw = nullptr;
    check(mubkit_verify_weyl(o.d, &raw));
    Report r(raw);
    return emit_report(o, out, r.get());
}

int run_verify_su2(const Options &o, Output &out) {
    if (!(o.tolerance > 0)) {
        throw CliError{kExitUsage, "--tolerance must be positive"};
    }
    mubkit_report *raw = nullptr;
    check(mubkit_verify_su2(o.d, o.a < 0 ? 0 : o.a, o.tolerance, &raw));
    Report r(raw);
    return emit_report(o, out, r.get());
}

int run_pauli_group(const Options &o, Output &out) {
    mubkit_report *raw = nullptr;
    check(mubkit_pauli_group(o.d, &raw));
    Report r(raw);
    return emit_report(o, out, r.get());
}

int run_entangle(const Options &o, Output &out) {
    if (o.basis_name.empty() == o.state_path.empty()) {
        throw CliError{kExitUsage, "give exactly one of --basis or --state"};
    }
    mubkit_report *raw = nullptr;
    if (!o.state_path.empty()) {
        std::ifstream in(o.state_path);
        if (!in) {
            throw CliError{kExitUsage, "cannot read '" + o.state_path + "'"};
        }
        std::stringstream buf;
        buf << in.rdbuf();
        mubkit_state *s_raw = nullptr;
        check(mubkit_state_from_json(buf.str().c_str(), &s_raw));
        State s(s_raw);
        check(mubkit_global_tangle(s.get(), o.factor_d, &raw));
    } else {
        mubkit_basis_set *set_raw = nullptr;
        std::string label = o.basis_name;
        if (label == "su2") {
            check(mubkit_basis_su2_adapted(&set_raw));
            label = "SU2_adapted";
        } else {
            check(mubkit_basis_two_qubit(&set_raw));
        }
        BasisSet set(set_raw);
        int index = 0;
        check(mubkit_basis_find(set.get(), label.c_str(), &index));
        check(mubkit_classify_basis(set.get(), index, 2, &raw));
    }
    Report r(raw);
    return emit_report(o, out, r.get());
}

int run_operator(const Options &o, Output &out) {
    mubkit_operator *raw = nullptr;
    if (o.op_name == "v0a") {
        check(mubkit_operator_v0a(o.d, o.a < 0 ? 0 : o.a, &raw));
    } else if (o.op_name == "x") {
        check(mubkit_operator_x(o.d, &raw));
    } else if (o.op_name == "z") {
        check(mubkit_operator_z(o.d, &raw));
    } else {
        check(mubkit_operator_h(o.d, &raw));
    }
    Operator op(raw);
    char *text = nullptr;
    check(mubkit_operator_render(op.get(), format_of(o), &text));
    out.stream() << take(text);
    return kExitOk;
}

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_path, "Write output to FILE instead of stdout");
}

CLI::Option *add_d(CLI::App *cmd, Options &o) {
    return cmd->add_option("--d", o.d, "Dimension, 2.." + std::to_string(kMaxDim))
        ->required()
        ->check(CLI::Range(2, kMaxDim));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact mutually unbiased bases, Weyl pairs and the qudit Pauli group.\n"
                 "Exit codes: 0 success, 1 verification failure, 2 usage error.",
                 "mubkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", mubkit_version());
    Options o;
    std::map<CLI::App *, int (*)(const Options &, Output &)> handlers;

    auto *basis = app.add_subcommand("basis", "Print B_0a (with --a), one vector (--a, --alpha) or the computational basis");
    add_d(basis, o);
    basis->add_option("--a", o.a, "Basis index a in 0..d-1");
    basis->add_option("--alpha", o.alpha, "Vector index alpha in 0..d-1");
    add_common(basis, o);
    handlers[basis] = run_basis;

    auto *mub = app.add_subcommand("mub-set", "Build and certify a set of mutually unbiased bases");
    add_d(mub, o);
    mub->add_flag("--all-b0a", o.all_b0a, "Certify every B_0a plus B_d, even for composite d");
    add_common(mub, o);
    handlers[mub] = run_mub_set;

    auto *two = app.add_subcommand("two-qubit-mubs", "The five two-qubit bases with their certificate");
    add_common(two, o);
    handlers[two] = run_two_qubit;

    auto *weyl = app.add_subcommand("verify-weyl", "Check the Weyl pair relations exactly");
    add_d(weyl, o);
    add_common(weyl, o);
    handlers[weyl] = run_verify_weyl;

    auto *su2 = app.add_subcommand("verify-su2", "Check the su(2) polar decomposition");
    add_d(su2, o);
    su2->add_option("--a", o.a, "Index a of v_0a (default 0)");
    su2->add_option("--tolerance", o.tolerance, "Entrywise bound for floating point checks")->capture_default_str();
    add_common(su2, o);
    handlers[su2] = run_verify_su2;

    auto *pauli = app.add_subcommand("pauli-group", "Enumerate and check the Pauli group of order d^3 (d <= 7)");
    add_d(pauli, o);
    add_common(pauli, o);
    handlers[pauli] = run_pauli_group;

    auto *ent = app.add_subcommand("entangle", "Classify by |det A| of the coefficient matrix");
    ent->add_option("--basis", o.basis_name, "Named two-qubit basis")
        ->check(CLI::IsMember({"canonical", "w_00", "w_11", "w_01", "w_10", "su2"}));
    ent->add_option("--state", o.state_path, "JSON state file {dim, scale_sq, entries}");
    ent->add_option("--factor-d", o.factor_d, "Dimension of each tensor factor for --state")
        ->check(CLI::Range(2, kMaxDim));
    add_common(ent, o);
    handlers[ent] = run_entangle;

    auto *op = app.add_subcommand("operator", "Print v0a, x, z or the radical diagonal h");
    add_d(op, o);
    op->add_option("--name", o.op_name, "Operator name")->required()->check(CLI::IsMember({"v0a", "x", "z", "h"}));
    op->add_option("--a", o.a, "Index a for v0a (default 0)");
    add_common(op, o);
    handlers[op] = run_operator;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        CLI::App *chosen = app.get_subcommands().front();
        Output out(o.out_path);
        int code = handlers.at(chosen)(o, out);
        out.stream().flush();
        return code;
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
}
