// Copyright 2026 The furdyn Authors
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


#ifndef FURDYN_FURDYN_H_
#define FURDYN_FURDYN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FURDYN_BUILDING_LIBRARY)
#define FURDYN_API __attribute__((visibility("default")))
#else
#define FURDYN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct furdyn_system furdyn_system;
typedef struct furdyn_family furdyn_family;
typedef struct furdyn_windowset furdyn_windowset;

typedef enum furdyn_status {
  FURDYN_OK = 0,
  FURDYN_INVALID_ARGUMENT = 1,
  FURDYN_PARSE = 2,
  /* a lemma or theorem precondition does not hold */
  FURDYN_HYPOTHESIS = 3,
  FURDYN_UNSUPPORTED = 4,
  FURDYN_INTERNAL = 5
} furdyn_status;

/* Message for the last failing call on this thread; "" after a success.
   Valid until the next call on the same thread. */
FURDYN_API const char* furdyn_last_error(void);
FURDYN_API const char* furdyn_version(void);
FURDYN_API const char* furdyn_status_name(furdyn_status s);
/* Frees every char* returned through an out parameter. */
FURDYN_API void furdyn_string_free(char* s);

/* Systems: rot(<name>) | doubling | tent | shift | sturmian(<name>) |
   thue_morse | prod(<spec>,<spec>) | id(circle|interval|shift) */
FURDYN_API furdyn_status furdyn_system_parse(const char* spec, furdyn_system** out);
FURDYN_API void furdyn_system_free(furdyn_system* s);
/* {"spec","space","map","diameter","transitive","isometric","note"} */
FURDYN_API furdyn_status furdyn_system_describe(const furdyn_system* s, char** json_out);
FURDYN_API furdyn_status furdyn_system_metric_at(const furdyn_system* s, double x, double y, double* out);

/* Families: B | cf | synd | thick | tsynd | ud>a | ld>=b | bud>a | bld>=b | k(<desc>) */
FURDYN_API furdyn_status furdyn_family_parse(const char* text, furdyn_family** out);
FURDYN_API void furdyn_family_free(furdyn_family* f);
FURDYN_API furdyn_status furdyn_family_to_string(const furdyn_family* f, char** out);
FURDYN_API furdyn_status furdyn_family_dual(const furdyn_family* f, furdyn_family** out);
FURDYN_API furdyn_status furdyn_family_is_translation_invariant(const furdyn_family* f, int* out);

/* Run-length text such as "64;1:17,0:3,1:44". */
FURDYN_API furdyn_status furdyn_windowset_from_rle(const char* text, furdyn_windowset** out);
/* evens | odds | squares | multiples:p | block:a-b | blocks:2^k | rle:<text> */
FURDYN_API furdyn_status furdyn_windowset_from_spec(const char* spec, size_t horizon, furdyn_windowset** out);
FURDYN_API void furdyn_windowset_free(furdyn_windowset* w);
FURDYN_API furdyn_status furdyn_windowset_horizon(const furdyn_windowset* w, size_t* out);
FURDYN_API furdyn_status furdyn_windowset_to_rle(const furdyn_windowset* w, char** out);
FURDYN_API furdyn_status furdyn_windowset_density_json(const furdyn_windowset* w, const char* name, char** json_out);

/* Verdict JSON: {"outcome","witness","horizon_used"}. */
FURDYN_API furdyn_status furdyn_contains(const furdyn_family* f, const furdyn_windowset* w, char** json_out);

/* config_json mirrors the experiment config; "seed" is mandatory.
   Reports carry "consistent" (bool) and "summary" (short witness). */
FURDYN_API furdyn_status furdyn_analyze(const char* system, const char* family, const char* notion,
                                        const char* config_json, char** report_json);
FURDYN_API furdyn_status furdyn_dichotomy(const char* system, const char* family, const char* config_json,
                                          char** report_json);
/* JSON array of reports; family may be NULL. */
FURDYN_API furdyn_status furdyn_lemmas(const char* system, const char* family, const char* config_json,
                                       char** reports_json);
/* Normalized config echo; a cheap way to validate a config. */
FURDYN_API furdyn_status furdyn_config_check(const char* config_json, char** normalized_json);
/* Re-serializes any JSON document with 12-significant-digit floats. */
FURDYN_API furdyn_status furdyn_canonical_json(const char* json_text, char** out);
/* <system>__<family>__<notion>__<seed>.json for a report document. */
FURDYN_API furdyn_status furdyn_report_filename(const char* report_json, char** out);
/* {"passed","checks"} */
FURDYN_API furdyn_status furdyn_selftest(uint64_t seed, int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* FURDYN_FURDYN_H_ */
