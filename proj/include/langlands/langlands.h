/* Copyright 2026 The Langlands Retraction Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LANGLANDS_LANGLANDS_H_
#define LANGLANDS_LANGLANDS_H_

/* C interface to the exact retraction library.
 *
 * Every function returns an lr_status. On failure a message is available from
 * lr_last_error() on the calling thread until its next call into the library.
 * Strings returned through char** are JSON (or SVG) documents owned by the
 * caller and released with lr_string_free. Vectors are passed as comma
 * separated rationals "p/q"; rationals inside JSON are strings. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LR_API __declspec(dllexport)
#else
#define LR_API __attribute__((visibility("default")))
#endif

typedef enum {
  LR_OK = 0,
  LR_ERR_DOMAIN = 1,    /* malformed input or violated precondition */
  LR_ERR_DIMENSION = 2, /* operand lengths disagree */
  LR_ERR_GUARD = 3,     /* exhaustive enumeration refused (rank too big) */
  LR_ERR_INTERNAL = 4,  /* broken invariant; a bug */
  LR_ERR_NULL = 5       /* a required pointer argument was NULL */
} lr_status;

typedef struct lr_system lr_system; /* basis of simple roots */
typedef struct lr_datum lr_datum;   /* reductive root datum */

LR_API const char* lr_version(void);
LR_API const char* lr_last_error(void);
LR_API const char* lr_status_name(lr_status s);
LR_API void lr_string_free(char* s);

/* "A3", "G2", ... */
LR_API lr_status lr_system_from_name(const char* name, lr_system** out);
/* {"gram": [[...], ...]} */
LR_API lr_status lr_system_from_gram_json(const char* json, lr_system** out);
LR_API void lr_system_free(lr_system* s);
LR_API lr_status lr_system_rank(const lr_system* s, size_t* out);
LR_API lr_status lr_system_is_obtuse(const lr_system* s, int* out);
/* {"name", "rank", "gram", "dual", "obtuse"} */
LR_API lr_status lr_system_info(const lr_system* s, char** out_json);

/* {"value", "active_set", "residual_coeffs", "certificate_ok"} */
LR_API lr_status lr_retract(const lr_system* s, const char* vector,
                            char** out_json);
/* Same document, computed by exhaustive search over active sets. */
LR_API lr_status lr_retract_oracle(const lr_system* s, const char* vector,
                                   char** out_json);

/* {"system", "rank", "cones": [{"J", "generators"}]} */
LR_API lr_status lr_fan(const lr_system* s, char** out_json);
/* Simpliciality, seeded completeness and face checks. *ok is set to 1 when
 * everything passed. */
LR_API lr_status lr_fan_check(const lr_system* s, uint64_t seed, size_t samples,
                              char** out_json, int* ok);
/* Rank 2 only. */
LR_API lr_status lr_fan_svg(const lr_system* s, char** out_svg);

/* values = f(0), ..., f(n); variant "sl" or "gl".
 * {"envelope", "pools"} */
LR_API lr_status lr_envelope(const char* values, const char* variant,
                             char** out_json);

/* "gl4", "GL(4)" or a catalog name (simply connected datum). */
LR_API lr_status lr_datum_from_group(const char* name, lr_datum** out);
/* {"rank": r, "coroots": [[...]], "roots": [[...]]} */
LR_API lr_status lr_datum_from_json(const char* json, lr_datum** out);
LR_API void lr_datum_free(lr_datum* d);
LR_API lr_status lr_datum_lattice_rank(const lr_datum* d, size_t* out);
/* {"value", "d", "certificate_ok"} */
LR_API lr_status lr_coweight_retract(const lr_datum* d, const char* coweight,
                                     char** out_json);

/* Request:
 *   {"systems": ["A2", "gl4", ...],
 *    "grams": [{"label": "...", "gram": [[...]]}, ...],
 *    "data": [{"label": "...", "rank": r, "coroots": ..., "roots": ...}],
 *    "trials": 100, "seed": 42, "checks": "all", "threads": 1,
 *    "allow_nonobtuse": false, "timing": false}
 * Only "systems" or one of "grams"/"data" is required. *ok is 1 iff no check
 * failed (and, unless allow_nonobtuse, none was hypothesis-violated). */
LR_API lr_status lr_verify(const char* request_json, char** out_json, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* LANGLANDS_LANGLANDS_H_ */
