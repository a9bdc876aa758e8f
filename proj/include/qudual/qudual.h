// Copyright 2026 The Qudual Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the qudual library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a qd_status; on
 * failure a description is available from qd_last_error() on the same
 * thread until the next failing call. Strings returned through char** out
 * parameters are heap-allocated and released with qd_string_free.
 */

#ifndef QUDUAL_QUDUAL_H_
#define QUDUAL_QUDUAL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QUDUAL_BUILDING_LIBRARY)
#    define QD_API __declspec(dllexport)
#  else
#    define QD_API __declspec(dllimport)
#  endif
#else
#  define QD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
  QD_OK = 0,
  /* Bad argument value: digit out of range, d < 2, null pointer, ... */
  QD_ERR_INVALID_ARGUMENT = 1,
  /* Malformed document or a state that fails normalization. */
  QD_ERR_VALIDATION = 2,
  /* Operands over different systems or representations. */
  QD_ERR_MISMATCH = 3,
  QD_ERR_OUT_OF_MEMORY = 4,
  QD_ERR_INTERNAL = 5
} qd_status;

typedef enum qd_rep { QD_REP_Q = 0, QD_REP_K = 1 } qd_rep;

typedef struct qd_state qd_state;
typedef struct qd_circuit qd_circuit;

QD_API const char* qd_version(void);
QD_API const char* qd_last_error(void);
QD_API const char* qd_status_name(qd_status status);
QD_API void qd_string_free(char* s);

QD_API int qd_is_prime(int d);

/* States. `amplitudes` holds `count` complex values as interleaved
 * (re, im) pairs, i.e. 2*count doubles, in big-endian label order. */
QD_API qd_status qd_state_create(int n, int d, qd_rep rep,
                                 const double* amplitudes, size_t count,
                                 qd_state** out);
QD_API qd_status qd_state_basis(int n, int d, qd_rep rep, const int* digits,
                                size_t len, qd_state** out);
QD_API qd_status qd_state_from_json(const char* json, qd_state** out);
QD_API qd_status qd_state_to_json(const qd_state* state, char** out);
QD_API void qd_state_free(qd_state* state);

QD_API int qd_state_qudits(const qd_state* state);
QD_API int qd_state_levels(const qd_state* state);
QD_API qd_rep qd_state_rep(const qd_state* state);
QD_API size_t qd_state_dim(const qd_state* state);
/* Copies 2*count doubles; count must equal qd_state_dim. */
QD_API qd_status qd_state_amplitudes(const qd_state* state, double* out,
                                     size_t count);
QD_API qd_status qd_inner_product(const qd_state* f, const qd_state* g,
                                  double* re, double* im);

/* Duality. A same-representation transform returns a copy. */
QD_API qd_status qd_transform(const qd_state* state, qd_rep target,
                              qd_state** out);
QD_API qd_status qd_planewave(int n, int d, const int* k, size_t len,
                              qd_state** out);

/* Circuits. */
QD_API qd_status qd_circuit_from_json(const char* json, qd_circuit** out);
QD_API qd_status qd_circuit_to_json(const qd_circuit* circuit, char** out);
QD_API qd_status qd_circuit_functional(int m, int d, qd_circuit** out);
QD_API void qd_circuit_free(qd_circuit* circuit);
QD_API qd_status qd_run_circuit(const qd_circuit* circuit,
                                const qd_state* state, qd_state** out);

/* JSON reports. */
QD_API qd_status qd_partition_json(int n, int d, const int* k, size_t len,
                                   char** out);
QD_API qd_status qd_entropy_json(const qd_state* state, char** out);
QD_API qd_status qd_analyze_json(const qd_state* state, char** out);
/* handlers: m-qudit q-rep state; sources: m digits. */
QD_API qd_status qd_functional_json(const qd_state* handlers,
                                    const int* sources, size_t len,
                                    char** out);
/* *passed is set to 1 iff every non-skipped check passed. */
QD_API qd_status qd_verify_json(int d, int n, uint64_t seed, char** out,
                                int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QUDUAL_QUDUAL_H_ */
