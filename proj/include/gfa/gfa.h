/* Copyright 2026 The gfa Authors
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

/* C interface to libgfa: free products G*F_n, G-automorphisms and their
 * action on Hom_G(G*F_n, G).
 *
 * Handles are opaque and owned by the caller. Every function returns a
 * gfa_status; on failure gfa_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap allocated and
 * must be released with gfa_string_free. JSON records follow schema 1
 * (docs/formats.md). Certificate functions fill *out_json even when the
 * status is GFA_VERIFY_FAILED or GFA_BOUND_EXCEEDED. */

#ifndef GFA_GFA_H_
#define GFA_GFA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GFA_API __declspec(dllexport)
#else
#define GFA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfa_status {
  GFA_OK = 0,
  GFA_PARSE_ERROR = 1,
  GFA_RANK_MISMATCH = 2,
  GFA_BACKEND_MISMATCH = 3,
  GFA_PRECONDITION = 4,
  GFA_BOUND_EXCEEDED = 5,
  GFA_UNSUPPORTED = 6,
  GFA_NOT_INVERTIBLE = 7,
  GFA_VERIFY_FAILED = 8,
  GFA_INVALID_ARGUMENT = 9,
  GFA_INTERNAL = 10
} gfa_status;

typedef struct gfa_group gfa_group;
typedef struct gfa_automorphism gfa_automorphism;

/* Zero fields mean "default". max_states overrides GFA_MAX_STATES. */
typedef struct gfa_options {
  int threads;
  uint64_t max_states;
  int v_radius;
} gfa_options;

GFA_API const char* gfa_version(void);
GFA_API const char* gfa_last_error(void);
GFA_API const char* gfa_status_name(gfa_status s);
GFA_API void gfa_string_free(char* s);

/* spec: "A5", "An", "Sn", "Cn", "trivial", "gens:<perm>;<perm>..." or "V". */
GFA_API gfa_status gfa_group_create(const char* spec, gfa_group** out);
GFA_API void gfa_group_free(gfa_group* g);
GFA_API gfa_status gfa_group_name(const gfa_group* g, char** out);
/* 0 for infinite groups. */
GFA_API uint64_t gfa_group_order(const gfa_group* g);
GFA_API gfa_status gfa_group_mul(const gfa_group* g, const char* a,
                                 const char* b, char** out);
GFA_API gfa_status gfa_group_inverse(const gfa_group* g, const char* a,
                                     char** out);

/* Automorphisms from generator words. */
GFA_API gfa_status gfa_automorphism_create(const gfa_group* g, int rank,
                                           const char* genword,
                                           gfa_automorphism** out);
GFA_API void gfa_automorphism_free(gfa_automorphism* a);
GFA_API gfa_status gfa_automorphism_genword(const gfa_automorphism* a,
                                            char** out);
/* Image of x_i, 1-based. */
GFA_API gfa_status gfa_automorphism_image(const gfa_automorphism* a, int i,
                                          char** out);
/* out = a o b. */
GFA_API gfa_status gfa_automorphism_compose(const gfa_automorphism* a,
                                            const gfa_automorphism* b,
                                            gfa_automorphism** out);
GFA_API gfa_status gfa_automorphism_inverse(const gfa_automorphism* a,
                                            gfa_automorphism** out);
/* act(point, a) = point o a, points as "[g1; ...; gn]". */
GFA_API gfa_status gfa_act(const gfa_group* g, const char* point,
                           const gfa_automorphism* a, char** out);
GFA_API gfa_status gfa_word_apply(const gfa_group* g,
                                  const gfa_automorphism* a, const char* word,
                                  char** out);

/* Certificates. */
GFA_API gfa_status gfa_separate(const gfa_group* g, const char* const* excluded,
                                size_t n_excluded, const char* target,
                                const gfa_options* opts, char** out_json);
GFA_API gfa_status gfa_transitivity(const gfa_group* g, const char* from,
                                    const char* to, char** out_json);
/* k <= 0: take k from the tuples. */
GFA_API gfa_status gfa_ktrans(const gfa_group* g, int k, const char* src,
                              const char* dst, const gfa_options* opts,
                              char** out_json);
GFA_API gfa_status gfa_rewrite_stab(const gfa_group* g, int rank,
                                    const char* genword, char** out_json);
/* rank <= 0: infer from the word. */
GFA_API gfa_status gfa_mixed_identity(const gfa_group* g, int rank,
                                      const char* word,
                                      const gfa_options* opts,
                                      char** out_json);
GFA_API gfa_status gfa_kernel(const gfa_group* g, int rank,
                              const gfa_options* opts, char** out_json);
GFA_API gfa_status gfa_faithful(const gfa_group* g, int rank,
                                const char* genword, const gfa_options* opts,
                                char** out_json);
GFA_API gfa_status gfa_orbits(const gfa_group* g, int rank,
                              const gfa_options* opts, char** out_json);
GFA_API gfa_status gfa_pair_orbits(const gfa_group* g, int rank,
                                   const gfa_options* opts, char** out_json);
/* op: "mul", "inv", "apply", "reduce", "ball". */
GFA_API gfa_status gfa_vcalc(const char* op, const char* const* args,
                             size_t n_args, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GFA_GFA_H_ */
