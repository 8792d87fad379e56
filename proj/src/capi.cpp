// Copyright 2026 The gfa Authors
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

#include "gfa/gfa.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "automorphism.hpp"
#include "certificate.hpp"
#include "error.hpp"

struct gfa_group {
  gfa::GroupPtr group;
};

struct gfa_automorphism {
  gfa::GroupPtr group;
  gfa::GAutomorphism alpha;
};

namespace {

thread_local std::string last_error;

gfa_status StatusOf(gfa::ErrorCode c) {
  switch (c) {
    case gfa::ErrorCode::kParse: return GFA_PARSE_ERROR;
    case gfa::ErrorCode::kRankMismatch: return GFA_RANK_MISMATCH;
    case gfa::ErrorCode::kBackendMismatch: return GFA_BACKEND_MISMATCH;
    case gfa::ErrorCode::kPrecondition: return GFA_PRECONDITION;
    case gfa::ErrorCode::kBoundExceeded: return GFA_BOUND_EXCEEDED;
    case gfa::ErrorCode::kUnsupported: return GFA_UNSUPPORTED;
    case gfa::ErrorCode::kNotInvertible: return GFA_NOT_INVERTIBLE;
  }
  return GFA_INTERNAL;
}

char* Dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
gfa_status Guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const gfa::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GFA_BOUND_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GFA_INTERNAL;
  }
}

gfa_status Null(const char* what) {
  last_error = std::string("null argument: ") + what;
  return GFA_INVALID_ARGUMENT;
}

gfa::RunOptions Options(const gfa_options* o) {
  gfa::RunOptions r;
  if (o == nullptr) return r;
  if (o->threads > 0) r.threads = o->threads;
  if (o->max_states > 0) r.max_states = o->max_states;
  if (o->v_radius > 0) r.v_radius = o->v_radius;
  return r;
}

gfa_status Emit(const gfa::Record& r, char** out_json) {
  *out_json = Dup(r.json.dump(2));
  switch (r.outcome) {
    case gfa::Outcome::kVerified: return GFA_OK;
    case gfa::Outcome::kFailed:
      last_error = "certificate check failed";
      return GFA_VERIFY_FAILED;
    case gfa::Outcome::kBoundExceeded:
      last_error = "search bound exceeded";
      return GFA_BOUND_EXCEEDED;
  }
  return GFA_INTERNAL;
}

}  // namespace

extern "C" {

const char* gfa_version(void) { return "1.0.0"; }

const char* gfa_last_error(void) { return last_error.c_str(); }

const char* gfa_status_name(gfa_status s) {
  switch (s) {
    case GFA_OK: return "ok";
    case GFA_PARSE_ERROR: return "parse_error";
    case GFA_RANK_MISMATCH: return "rank_mismatch";
    case GFA_BACKEND_MISMATCH: return "backend_mismatch";
    case GFA_PRECONDITION: return "precondition";
    case GFA_BOUND_EXCEEDED: return "bound_exceeded";
    case GFA_UNSUPPORTED: return "unsupported";
    case GFA_NOT_INVERTIBLE: return "not_invertible";
    case GFA_VERIFY_FAILED: return "verify_failed";
    case GFA_INVALID_ARGUMENT: return "invalid_argument";
    case GFA_INTERNAL: return "internal";
  }
  return "unknown";
}

void gfa_string_free(char* s) { std::free(s); }

gfa_status gfa_group_create(const char* spec, gfa_group** out) {
  if (!spec) return Null("spec");
  if (!out) return Null("out");
  return Guard([&] {
    auto g = gfa::MakeGroup(spec);
    *out = new gfa_group{std::move(g)};
    return GFA_OK;
  });
}

void gfa_group_free(gfa_group* g) { delete g; }

gfa_status gfa_group_name(const gfa_group* g, char** out) {
  if (!g) return Null("group");
  if (!out) return Null("out");
  return Guard([&] {
    *out = Dup(g->group->name());
    return GFA_OK;
  });
}

uint64_t gfa_group_order(const gfa_group* g) {
  if (!g) return 0;
  const auto* f = g->group->AsFinite();
  return f ? f->order() : 0;
}

gfa_status gfa_group_mul(const gfa_group* g, const char* a, const char* b,
                         char** out) {
  if (!g || !a || !b || !out) return Null("group, a, b or out");
  return Guard([&] {
    *out = Dup((g->group->Parse(a) * g->group->Parse(b)).ToString());
    return GFA_OK;
  });
}

gfa_status gfa_group_inverse(const gfa_group* g, const char* a, char** out) {
  if (!g || !a || !out) return Null("group, a or out");
  return Guard([&] {
    *out = Dup(g->group->Parse(a).Inverse().ToString());
    return GFA_OK;
  });
}

gfa_status gfa_automorphism_create(const gfa_group* g, int rank,
                                   const char* genword,
                                   gfa_automorphism** out) {
  if (!g || !genword || !out) return Null("group, genword or out");
  return Guard([&] {
    if (rank < 1) gfa::Fail(gfa::ErrorCode::kPrecondition, "rank must be positive");
    auto w = gfa::ParseGenWord(genword, rank, *g->group);
    *out = new gfa_automorphism{
        g->group, gfa::GAutomorphism::FromGenWord(rank, std::move(w))};
    return GFA_OK;
  });
}

void gfa_automorphism_free(gfa_automorphism* a) { delete a; }

gfa_status gfa_automorphism_genword(const gfa_automorphism* a, char** out) {
  if (!a || !out) return Null("automorphism or out");
  return Guard([&] {
    *out = Dup(gfa::ToString(a->alpha.genword()));
    return GFA_OK;
  });
}

gfa_status gfa_automorphism_image(const gfa_automorphism* a, int i,
                                  char** out) {
  if (!a || !out) return Null("automorphism or out");
  return Guard([&] {
    if (i < 1 || i > a->alpha.rank()) {
      gfa::Fail(gfa::ErrorCode::kRankMismatch,
                "x" + std::to_string(i) + " does not exist in rank " +
                    std::to_string(a->alpha.rank()));
    }
    *out = Dup(a->alpha.image(i - 1).ToString());
    return GFA_OK;
  });
}

gfa_status gfa_automorphism_compose(const gfa_automorphism* a,
                                    const gfa_automorphism* b,
                                    gfa_automorphism** out) {
  if (!a || !b || !out) return Null("a, b or out");
  return Guard([&] {
    if (a->group != b->group) {
      gfa::Fail(gfa::ErrorCode::kBackendMismatch,
                "automorphisms over different group handles");
    }
    *out = new gfa_automorphism{a->group, gfa::Compose(a->alpha, b->alpha)};
    return GFA_OK;
  });
}

gfa_status gfa_automorphism_inverse(const gfa_automorphism* a,
                                    gfa_automorphism** out) {
  if (!a || !out) return Null("automorphism or out");
  return Guard([&] {
    *out = new gfa_automorphism{a->group, gfa::Inverse(a->alpha)};
    return GFA_OK;
  });
}

gfa_status gfa_act(const gfa_group* g, const char* point,
                   const gfa_automorphism* a, char** out) {
  if (!g || !point || !a || !out) return Null("group, point, automorphism or out");
  return Guard([&] {
    auto p = gfa::HomPoint::Parse(point, *g->group);
    *out = Dup(gfa::Act(p, a->alpha, *g->group).ToString());
    return GFA_OK;
  });
}

gfa_status gfa_word_apply(const gfa_group* g, const gfa_automorphism* a,
                          const char* word, char** out) {
  if (!g || !a || !word || !out) return Null("group, automorphism, word or out");
  return Guard([&] {
    auto w = gfa::FreeProductWord::Parse(word, a->alpha.rank(), *g->group);
    *out = Dup(gfa::Apply(a->alpha, w).ToString());
    return GFA_OK;
  });
}

gfa_status gfa_separate(const gfa_group* g, const char* const* excluded,
                        size_t n_excluded, const char* target,
                        const gfa_options* opts, char** out_json) {
  if (!g || !target || !out_json || (n_excluded && !excluded)) {
    return Null("group, excluded, target or out_json");
  }
  return Guard([&] {
    std::vector<std::string> t(excluded, excluded + n_excluded);
    return Emit(gfa::Separate(*g->group, t, target, Options(opts)), out_json);
  });
}

gfa_status gfa_transitivity(const gfa_group* g, const char* from,
                            const char* to, char** out_json) {
  if (!g || !from || !to || !out_json) return Null("group, from, to or out_json");
  return Guard([&] {
    return Emit(gfa::Transitivity(*g->group, from, to), out_json);
  });
}

gfa_status gfa_ktrans(const gfa_group* g, int k, const char* src,
                      const char* dst, const gfa_options* opts,
                      char** out_json) {
  if (!g || !src || !dst || !out_json) return Null("group, src, dst or out_json");
  return Guard([&] {
    std::optional<int> kk;
    if (k > 0) kk = k;
    return Emit(gfa::KTransitivity(*g->group, src, dst, kk, Options(opts)),
                out_json);
  });
}

gfa_status gfa_rewrite_stab(const gfa_group* g, int rank, const char* genword,
                            char** out_json) {
  if (!g || !genword || !out_json) return Null("group, genword or out_json");
  return Guard([&] {
    return Emit(gfa::RewriteStab(*g->group, rank, genword), out_json);
  });
}

gfa_status gfa_mixed_identity(const gfa_group* g, int rank, const char* word,
                              const gfa_options* opts, char** out_json) {
  if (!g || !word || !out_json) return Null("group, word or out_json");
  return Guard([&] {
    return Emit(gfa::MixedIdentity(*g->group, rank, word, Options(opts)),
                out_json);
  });
}

gfa_status gfa_kernel(const gfa_group* g, int rank, const gfa_options* opts,
                      char** out_json) {
  if (!g || !out_json) return Null("group or out_json");
  return Guard([&] {
    return Emit(gfa::Kernel(*g->group, rank, Options(opts)), out_json);
  });
}

gfa_status gfa_faithful(const gfa_group* g, int rank, const char* genword,
                        const gfa_options* opts, char** out_json) {
  if (!g || !genword || !out_json) return Null("group, genword or out_json");
  return Guard([&] {
    return Emit(gfa::Faithful(*g->group, rank, genword, Options(opts)),
                out_json);
  });
}

gfa_status gfa_orbits(const gfa_group* g, int rank, const gfa_options* opts,
                      char** out_json) {
  if (!g || !out_json) return Null("group or out_json");
  return Guard([&] {
    return Emit(gfa::Orbits(*g->group, rank, false, Options(opts)), out_json);
  });
}

gfa_status gfa_pair_orbits(const gfa_group* g, int rank,
                           const gfa_options* opts, char** out_json) {
  if (!g || !out_json) return Null("group or out_json");
  return Guard([&] {
    return Emit(gfa::Orbits(*g->group, rank, true, Options(opts)), out_json);
  });
}

gfa_status gfa_vcalc(const char* op, const char* const* args, size_t n_args,
                     char** out_json) {
  if (!op || !out_json || (n_args && !args)) return Null("op, args or out_json");
  return Guard([&] {
    std::vector<std::string> a(args, args + n_args);
    return Emit(gfa::VCalc(op, a), out_json);
  });
}

}  // extern "C"
