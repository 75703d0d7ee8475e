/*
 * Copyright 2026 The lowk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef LOWK_LOWK_H_
#define LOWK_LOWK_H_

#include <stdint.h>

#if defined(_WIN32)
#define LOWK_API __declspec(dllexport)
#else
#define LOWK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lowk_status {
  LOWK_OK = 0,
  LOWK_ERR_INVALID_ARGUMENT = 1,
  LOWK_ERR_UNSUPPORTED = 2,
  LOWK_ERR_TOO_LARGE = 3,
  LOWK_ERR_INTERNAL = 4,
} lowk_status;

/* Opaque finite group. */
typedef struct lowk_group lowk_group;

/* Library version string, static storage. */
LOWK_API const char* lowk_version(void);

/* Message for the last failing call on this thread; "" if none. Valid until
   the next call on the same thread. */
LOWK_API const char* lowk_last_error(void);

/* Frees any string returned through a char** out-parameter. NULL is allowed. */
LOWK_API void lowk_string_free(char* s);

/* family: cyclic, dicyclic (param m), quaternion (param k), tstar, ostar,
   istar (param ignored). */
LOWK_API lowk_status lowk_group_create(const char* family, uint64_t param, lowk_group** out);
LOWK_API void lowk_group_destroy(lowk_group* g);

LOWK_API lowk_status lowk_group_order(const lowk_group* g, uint64_t* out);
LOWK_API lowk_status lowk_group_name(const lowk_group* g, char** out);

LOWK_API lowk_status lowk_whitehead_rank(const lowk_group* g, uint64_t max_brute_force, uint64_t* out);
LOWK_API lowk_status lowk_carter_rank(const lowk_group* g, uint64_t max_brute_force, uint64_t* out);
/* field: "Q", "Qp:<p>" or "Fp:<p>". */
LOWK_API lowk_status lowk_r_field(const lowk_group* g, const char* field, uint64_t max_brute_force,
                                  uint64_t* out);
LOWK_API lowk_status lowk_lambda(uint64_t m, uint64_t* out);

/* JSON report. invariants: comma-separated subset of
   wh,k0,kminus1,rf,wedderburn; NULL means wh,k0,kminus1. field may be NULL
   (Q). */
LOWK_API lowk_status lowk_group_report(const lowk_group* g, const char* invariants, const char* field,
                                       uint64_t max_brute_force, char** json_out);

/* Classification of subgroups of B_n(S^2) as JSON; vc != 0 adds the virtually
   cyclic lists (odd n and n = 4 only). */
LOWK_API lowk_status lowk_classify(uint64_t n, int vc, char** json_out);

/* Runs the B4(S^2) check suites (braid, actions, gamma, kernel, rs, all).
   *all_passed is set to 1 when every check passed. */
LOWK_API lowk_status lowk_b4_verify(const char* suite, char** json_out, int* all_passed);

/* Lower K-theory report for B4(S^2) as JSON. */
LOWK_API lowk_status lowk_b4_report(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* LOWK_LOWK_H_ */
