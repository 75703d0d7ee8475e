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
/* Exercises the shared library through its C header, compiled as C. */

#include <stdio.h>
#include <string.h>

#include "lowk/lowk.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static int contains(const char* haystack, const char* needle) { return strstr(haystack, needle) != NULL; }

int main(void) {
  lowk_group* g = NULL;
  uint64_t v = 0;
  char* s = NULL;
  int all = 0;

  CHECK(strlen(lowk_version()) > 0);

  CHECK(lowk_group_create("dicyclic", 5, &g) == LOWK_OK);
  CHECK(lowk_group_order(g, &v) == LOWK_OK && v == 20);
  CHECK(lowk_group_name(g, &s) == LOWK_OK && strcmp(s, "Dic_20") == 0);
  lowk_string_free(s);
  CHECK(lowk_whitehead_rank(g, 5000, &v) == LOWK_OK && v == 2);
  CHECK(lowk_carter_rank(g, 5000, &v) == LOWK_OK && v == 1);
  CHECK(lowk_r_field(g, "Qp:5", 5000, &v) == LOWK_OK && v == 6);
  CHECK(lowk_group_report(g, NULL, NULL, 5000, &s) == LOWK_OK);
  CHECK(contains(s, "\"schema\":\"lowk/1\"") && contains(s, "\"group\":\"Dic_20\""));
  lowk_string_free(s);
  lowk_group_destroy(g);

  CHECK(lowk_group_create("quaternion", 4, &g) == LOWK_OK);
  CHECK(lowk_group_name(g, &s) == LOWK_OK && strcmp(s, "Q16") == 0);
  lowk_string_free(s);
  lowk_group_destroy(g);

  CHECK(lowk_group_create("dicyclic", 2000, &g) == LOWK_OK);
  CHECK(lowk_carter_rank(g, 5000, &v) == LOWK_ERR_TOO_LARGE);
  CHECK(strlen(lowk_last_error()) > 0);
  lowk_group_destroy(g);

  g = NULL;
  CHECK(lowk_group_create("dihedral", 3, &g) == LOWK_ERR_INVALID_ARGUMENT && g == NULL);
  CHECK(contains(lowk_last_error(), "dihedral"));
  CHECK(lowk_group_order(NULL, &v) == LOWK_ERR_INVALID_ARGUMENT);
  CHECK(lowk_lambda(13, NULL) == LOWK_ERR_INVALID_ARGUMENT);

  CHECK(lowk_lambda(8191, &v) == LOWK_OK && v == 315);
  CHECK(strlen(lowk_last_error()) == 0);
  CHECK(lowk_lambda(9, &v) == LOWK_ERR_INVALID_ARGUMENT);

  CHECK(lowk_classify(4, 1, &s) == LOWK_OK && contains(s, "\"T*\""));
  lowk_string_free(s);
  CHECK(lowk_classify(6, 1, &s) == LOWK_ERR_UNSUPPORTED);

  CHECK(lowk_b4_verify("all", &s, &all) == LOWK_OK && all == 1);
  lowk_string_free(s);
  CHECK(lowk_b4_verify("nope", &s, &all) == LOWK_ERR_INVALID_ARGUMENT);

  CHECK(lowk_b4_report(&s) == LOWK_OK && contains(s, "Z ⊕ Nil_1"));
  lowk_string_free(s);
  lowk_string_free(NULL);

  if (failures) fprintf(stderr, "%d check(s) failed\n", failures);
  return failures ? 1 : 0;
}
