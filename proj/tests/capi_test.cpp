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

#include <gtest/gtest.h>

#include <string>

#include "gfa/gfa.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Str {
  char* p = nullptr;
  ~Str() { gfa_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(gfa_group_create("A5", &g), GFA_OK); }
  void TearDown() override { gfa_group_free(g); }
  gfa_group* g = nullptr;
};

TEST_F(CApiTest, GroupBasics) {
  EXPECT_EQ(gfa_group_order(g), 60u);
  Str n, m, i;
  ASSERT_EQ(gfa_group_name(g, &n.p), GFA_OK);
  EXPECT_EQ(n.s(), "A5");
  ASSERT_EQ(gfa_group_mul(g, "(0 1 2)", "(0 1 2)", &m.p), GFA_OK);
  EXPECT_EQ(m.s(), "(0 2 1)");
  ASSERT_EQ(gfa_group_inverse(g, "(0 1 2 3 4)", &i.p), GFA_OK);
  EXPECT_EQ(i.s(), "(0 4 3 2 1)");
}

TEST_F(CApiTest, Errors) {
  gfa_group* bad = nullptr;
  EXPECT_EQ(gfa_group_create("Q8", &bad), GFA_PARSE_ERROR);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::string(gfa_last_error()), "");
  Str m;
  EXPECT_EQ(gfa_group_mul(g, "(0 1", "(0 1 2)", &m.p), GFA_PARSE_ERROR);
  EXPECT_EQ(gfa_group_mul(nullptr, "e", "e", &m.p), GFA_INVALID_ARGUMENT);
  EXPECT_EQ(gfa_group_mul(g, "(0 1)", "e", &m.p), GFA_PARSE_ERROR);
  EXPECT_STREQ(gfa_status_name(GFA_BOUND_EXCEEDED), "bound_exceeded");
  EXPECT_EQ(gfa_group_order(nullptr), 0u);
}

TEST_F(CApiTest, Automorphisms) {
  gfa_automorphism *a = nullptr, *b = nullptr, *ab = nullptr, *inv = nullptr;
  ASSERT_EQ(gfa_automorphism_create(g, 2, "multx(1,2,+) multg(2){(0 1 2)}", &a), GFA_OK);
  ASSERT_EQ(gfa_automorphism_create(g, 2, "inv(1)", &b), GFA_OK);
  ASSERT_EQ(gfa_automorphism_compose(a, b, &ab), GFA_OK);
  ASSERT_EQ(gfa_automorphism_inverse(ab, &inv), GFA_OK);
  Str img, w, p, q, ap;
  ASSERT_EQ(gfa_automorphism_image(ab, 1, &img.p), GFA_OK);
  // ab(x1) = a(x1^-1) = (x1 * x2)^-1; multg(2) leaves x1 alone.
  EXPECT_EQ(img.s(), "x2^-1 * x1^-1");
  ASSERT_EQ(gfa_automorphism_genword(ab, &w.p), GFA_OK);
  EXPECT_EQ(w.s(), "multx(1,2,+) multg(2){(0 1 2)} inv(1)");
  ASSERT_EQ(gfa_act(g, "[(0 1 2); e]", ab, &p.p), GFA_OK);
  gfa_automorphism* dummy = nullptr;
  EXPECT_EQ(gfa_automorphism_image(ab, 3, &img.p), GFA_RANK_MISMATCH);
  EXPECT_EQ(gfa_automorphism_create(g, 2, "inv(3)", &dummy), GFA_RANK_MISMATCH);
  ASSERT_EQ(gfa_act(g, p.p, inv, &q.p), GFA_OK);
  EXPECT_EQ(q.s(), "[(0 1 2); e]");
  ASSERT_EQ(gfa_word_apply(g, b, "x1 * x2", &ap.p), GFA_OK);
  EXPECT_EQ(ap.s(), "x1^-1 * x2");
  for (auto* x : {a, b, ab, inv}) gfa_automorphism_free(x);
}

TEST_F(CApiTest, SeparationCertificate) {
  const char* t[] = {"(0 1 2 3 4)"};
  Str out;
  ASSERT_EQ(gfa_separate(g, t, 1, "(0 1)(2 3)", nullptr, &out.p), GFA_OK);
  Json j = Json::parse(out.s());
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["kind"], "separation");
  EXPECT_EQ(j["witness"]["word"], "c{(0 4 3 2 1)} * x1");
  EXPECT_EQ(j["check"]["passed"], true);
  EXPECT_EQ(j["outcome"], "verified");
  Str bad;
  const char* t2[] = {"(0 1)(2 3)"};
  EXPECT_EQ(gfa_separate(g, t2, 1, "(0 1)(2 3)", nullptr, &bad.p), GFA_PRECONDITION);
  EXPECT_EQ(bad.p, nullptr);
}

TEST_F(CApiTest, OtherCertificates) {
  gfa_options o{1, 0, 0};
  Str a, b, c, d, e, f, h;
  EXPECT_EQ(gfa_transitivity(g, "[e; e]", "[(0 1 2); (1 2 3)]", &a.p), GFA_OK);
  EXPECT_EQ(gfa_ktrans(g, 2, "[e; e][(0 1 2); e]", "[e; (0 1 2)][(0 1 2); e]", &o, &b.p), GFA_OK);
  EXPECT_EQ(Json::parse(b.s())["input"]["k"], 2);
  EXPECT_EQ(gfa_rewrite_stab(g, 2, "multg(1){(0 1 2)} conj(2){(1 2 3)}", &c.p), GFA_OK);
  EXPECT_EQ(Json::parse(c.s())["witness"]["genword"], "conj(2){(1 2 3)}");
  EXPECT_EQ(gfa_mixed_identity(g, 0, "x1^30", &o, &d.p), GFA_OK);
  EXPECT_EQ(Json::parse(d.s())["witness"]["verdict"], "identity");
  EXPECT_EQ(gfa_kernel(g, 2, &o, &e.p), GFA_OK);
  EXPECT_EQ(Json::parse(e.s())["check"]["points_checked"], 3600);
  EXPECT_EQ(gfa_faithful(g, 1, "inv(1)", &o, &f.p), GFA_OK);
  EXPECT_EQ(Json::parse(f.s())["witness"]["outcome"], "witness");
  EXPECT_EQ(gfa_orbits(g, 2, &o, &h.p), GFA_OK);
  Json r = Json::parse(h.s());
  EXPECT_EQ(r["report"]["num_orbits"], 1);
  EXPECT_EQ(r["report"]["sizes"][0], 3600);
}

TEST_F(CApiTest, BoundExceeded) {
  gfa_options o{1, 100, 0};
  Str out;
  EXPECT_EQ(gfa_orbits(g, 2, &o, &out.p), GFA_BOUND_EXCEEDED);
  gfa_group* v = nullptr;
  ASSERT_EQ(gfa_group_create("V", &v), GFA_OK);
  Str mi;
  EXPECT_EQ(gfa_mixed_identity(v, 1, "1", nullptr, &mi.p), GFA_BOUND_EXCEEDED);
  EXPECT_EQ(Json::parse(mi.s())["witness"]["verdict"], "unknown_at_bound");
  gfa_group_free(v);
}

TEST(CApiVCalc, Arithmetic) {
  const char* args[] = {"V{0,10,11 -> 00,01,1}"};
  Str out;
  ASSERT_EQ(gfa_vcalc("inv", args, 1, &out.p), GFA_OK);
  EXPECT_EQ(Json::parse(out.s())["result"], "V{00,01,1 -> 0,10,11}");
  const char* ball[] = {"1"};
  Str b;
  ASSERT_EQ(gfa_vcalc("ball", ball, 1, &b.p), GFA_OK);
  EXPECT_EQ(Json::parse(b.s())["result"]["size"], 8);
  Str bad;
  EXPECT_EQ(gfa_vcalc("pow", args, 1, &bad.p), GFA_PARSE_ERROR);
}

}  // namespace
