/*
 * Copyright 2026 The mubkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libmubkit.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return a mubkit_status; on failure the
 * out-parameters are left untouched and mubkit_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * allocated by the library and released with mubkit_string_free.
 */

#ifndef MUBKIT_MUBKIT_H
#define MUBKIT_MUBKIT_H

#include <stddef.h>

#if defined(MUBKIT_BUILDING_LIBRARY)
#define MUBKIT_API __attribute__((visibility("default")))
#else
#define MUBKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mubkit_status {
    MUBKIT_OK = 0,
    MUBKIT_ERR_INVALID_ARGUMENT = 1,
    MUBKIT_ERR_OUT_OF_RANGE = 2,
    MUBKIT_ERR_DIMENSION_MISMATCH = 3,
    MUBKIT_ERR_PARSE = 4,
    MUBKIT_ERR_SIZE_LIMIT = 5,
    MUBKIT_ERR_INTERNAL = 6,
    MUBKIT_ERR_NULL_POINTER = 7,
} mubkit_status;

typedef enum mubkit_format {
    MUBKIT_FORMAT_TEXT = 0,
    MUBKIT_FORMAT_JSON = 1,
} mubkit_format;

typedef struct mubkit_scalar mubkit_scalar;
typedef struct mubkit_state mubkit_state;
typedef struct mubkit_basis_set mubkit_basis_set;
typedef struct mubkit_operator mubkit_operator;
typedef struct mubkit_report mubkit_report;

MUBKIT_API const char *mubkit_version(void);
MUBKIT_API const char *mubkit_status_name(mubkit_status status);
/* Message for the most recent failure on this thread, "" after a success. */
MUBKIT_API const char *mubkit_last_error(void);
MUBKIT_API void mubkit_string_free(char *text);

/* ---- exact cyclotomic scalars ---- */

MUBKIT_API mubkit_status mubkit_scalar_root_of_unity(int n, long long e, mubkit_scalar **out);
/* Parses "conductor:N;coeffs:c0,...". */
MUBKIT_API mubkit_status mubkit_scalar_parse(const char *text, mubkit_scalar **out);
MUBKIT_API mubkit_status mubkit_scalar_add(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out);
MUBKIT_API mubkit_status mubkit_scalar_sub(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out);
MUBKIT_API mubkit_status mubkit_scalar_mul(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out);
MUBKIT_API mubkit_status mubkit_scalar_div(const mubkit_scalar *a, const mubkit_scalar *b, mubkit_scalar **out);
MUBKIT_API mubkit_status mubkit_scalar_conjugate(const mubkit_scalar *a, mubkit_scalar **out);
MUBKIT_API mubkit_status mubkit_scalar_equal(const mubkit_scalar *a, const mubkit_scalar *b, int *out);
MUBKIT_API mubkit_status mubkit_scalar_to_string(const mubkit_scalar *a, char **out);
MUBKIT_API mubkit_status mubkit_scalar_to_complex(const mubkit_scalar *a, double *re, double *im);
MUBKIT_API void mubkit_scalar_free(mubkit_scalar *a);

/* ---- state vectors ---- */

MUBKIT_API mubkit_status mubkit_state_ket(int d, int k, mubkit_state **out);
/* The vector |a alpha> of dimension d. */
MUBKIT_API mubkit_status mubkit_state_mub_vector(int d, int a, int alpha, mubkit_state **out);
MUBKIT_API mubkit_status mubkit_state_from_json(const char *json, mubkit_state **out);
MUBKIT_API mubkit_status mubkit_state_tensor(const mubkit_state *u, const mubkit_state *v, mubkit_state **out);
MUBKIT_API mubkit_status mubkit_state_dim(const mubkit_state *s, int *out);
MUBKIT_API mubkit_status mubkit_state_entry(const mubkit_state *s, int k, mubkit_scalar **out);
/* |<u|v>|^2 as a canonical rational string, or a scalar string when irrational. */
MUBKIT_API mubkit_status mubkit_state_overlap_sq(const mubkit_state *u, const mubkit_state *v, char **out);
MUBKIT_API mubkit_status mubkit_state_render(const mubkit_state *s, mubkit_format format, char **out);
MUBKIT_API void mubkit_state_free(mubkit_state *s);

/* ---- bases and sets of bases ---- */

MUBKIT_API mubkit_status mubkit_basis_b0a(int d, int a, mubkit_basis_set **out);
MUBKIT_API mubkit_status mubkit_basis_computational(int d, mubkit_basis_set **out);
/* B_00..B_0(d-1) and B_d for prime d, otherwise B_d, B_00, B_01. Certified. */
MUBKIT_API mubkit_status mubkit_basis_mub_set(int d, mubkit_basis_set **out);
/* Every B_0a plus B_d, certified regardless of d. */
MUBKIT_API mubkit_status mubkit_basis_b0a_family(int d, mubkit_basis_set **out);
/* canonical, w_00, w_11, w_01, w_10 in dimension 4. Certified. */
MUBKIT_API mubkit_status mubkit_basis_two_qubit(mubkit_basis_set **out);
MUBKIT_API mubkit_status mubkit_basis_su2_adapted(mubkit_basis_set **out);
/* A set holding one basis read from JSON {label, vectors, tags?}. */
MUBKIT_API mubkit_status mubkit_basis_from_json(const char *json, mubkit_basis_set **out);
/* A new set holding the listed bases of `set`, in the given order. */
MUBKIT_API mubkit_status mubkit_basis_select(const mubkit_basis_set *set, const int *indices, size_t count,
                                             mubkit_basis_set **out);
MUBKIT_API mubkit_status mubkit_basis_count(const mubkit_basis_set *set, int *out);
/* Index of the basis with this label, or MUBKIT_ERR_OUT_OF_RANGE. */
MUBKIT_API mubkit_status mubkit_basis_find(const mubkit_basis_set *set, const char *label, int *out);
MUBKIT_API mubkit_status mubkit_basis_label(const mubkit_basis_set *set, int index, char **out);
MUBKIT_API mubkit_status mubkit_basis_vector(const mubkit_basis_set *set, int index, int vector,
                                             mubkit_state **out);
/* The stored certificate, or a fresh pairwise certificate of every basis. */
MUBKIT_API mubkit_status mubkit_basis_certify(const mubkit_basis_set *set, mubkit_report **out);
MUBKIT_API mubkit_status mubkit_basis_render(const mubkit_basis_set *set, mubkit_format format, char **out);
MUBKIT_API void mubkit_basis_free(mubkit_basis_set *set);

/* ---- operators ---- */

MUBKIT_API mubkit_status mubkit_operator_v0a(int d, int a, mubkit_operator **out);
MUBKIT_API mubkit_status mubkit_operator_x(int d, mubkit_operator **out);
MUBKIT_API mubkit_status mubkit_operator_z(int d, mubkit_operator **out);
/* The Hermitian factor h, whose entries are square roots of integers. */
MUBKIT_API mubkit_status mubkit_operator_h(int d, mubkit_operator **out);
MUBKIT_API mubkit_status mubkit_operator_render(const mubkit_operator *op, mubkit_format format, char **out);
MUBKIT_API void mubkit_operator_free(mubkit_operator *op);

/* ---- verification and classification reports ---- */

MUBKIT_API mubkit_status mubkit_verify_weyl(int d, mubkit_report **out);
MUBKIT_API mubkit_status mubkit_verify_su2(int d, int a, double tolerance, mubkit_report **out);
/* Rejects d above 7 with MUBKIT_ERR_SIZE_LIMIT. */
MUBKIT_API mubkit_status mubkit_pauli_group(int d, mubkit_report **out);
MUBKIT_API mubkit_status mubkit_classify_basis(const mubkit_basis_set *set, int index, int factor_d,
                                               mubkit_report **out);
MUBKIT_API mubkit_status mubkit_global_tangle(const mubkit_state *state, int factor_d, mubkit_report **out);
/* Whether every check passed; classifications always pass. */
MUBKIT_API mubkit_status mubkit_report_passed(const mubkit_report *report, int *out);
MUBKIT_API mubkit_status mubkit_report_render(const mubkit_report *report, mubkit_format format, char **out);
MUBKIT_API void mubkit_report_free(mubkit_report *report);

#ifdef __cplusplus
}
#endif

#endif /* MUBKIT_MUBKIT_H */
