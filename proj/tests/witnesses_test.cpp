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

#include <deque>
#include <map>

#include "error.hpp"
#include "support.hpp"
#include "witnesses.hpp"

namespace gfa {
namespace {

using testing::Rng;

class WitnessTest : public ::testing::Test {
 protected:
  GroupPtr a5 = MakeGroup("A5");
  GroupPtr v = MakeGroup("V");
  const PermutationGroup& F() { return *a5->AsFinite(); }
  GroupElement E(const char* s) { return a5->Parse(s); }

  std::vector<HomPoint> DistinctPoints(int k, int rank, Rng& rng) {
    std::vector<HomPoint> out;
    while (static_cast<int>(out.size()) < k) {
      auto p = testing::RandomPoint(*a5, rank, rng);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
  }
};

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kParse;
}

// ---------------------------------------------------------------- transitivity

TEST_F(WitnessTest, TransitivityFixtures) {
  auto phi = HomPoint::Trivial(*a5, 2);
  EXPECT_TRUE(TransitivityWitness(phi, phi).genword().empty());
  auto psi = HomPoint::Parse("[(0 1 2); (1 2 3)]", *a5);
  auto a = TransitivityWitness(phi, psi);
  EXPECT_EQ(ToString(a.genword()), "multg(1){(0 1 2)} multg(2){(1 2 3)}");
  EXPECT_EQ(Act(phi, a, *a5), psi);
  EXPECT_EQ(CodeOf([&] { TransitivityWitness(phi, HomPoint::Trivial(*a5, 3)); }),
            ErrorCode::kRankMismatch);
}

TEST_F(WitnessTest, TransitivityRandom) {
  Rng rng(41);
  for (const auto& g : {a5, v}) {
    for (int k = 0; k < 200; ++k) {
      auto phi = testing::RandomPoint(*g, 2, rng);
      auto psi = testing::RandomPoint(*g, 2, rng);
      auto a = TransitivityWitness(phi, psi);
      ASSERT_EQ(ActViaImages(phi, a, *g), psi);
      for (const auto& s : a.genword()) ASSERT_TRUE(std::holds_alternative<MultGGen>(s));
    }
  }
}

// ---------------------------------------------------------------- separation

TEST_F(WitnessTest, SeparationSingleton) {
  auto s = MakeSeparationWord(*a5, {E("(0 1 2 3 4)")}, E("(0 1)(2 3)"));
  EXPECT_EQ(s.word.ToString(), "c{(0 4 3 2 1)} * x1");
  EXPECT_TRUE(Evaluate(s.word, HomPoint{{E("(0 1 2 3 4)")}}, *a5).IsIdentity());
  EXPECT_FALSE(Evaluate(s.word, HomPoint{{E("(0 1)(2 3)")}}, *a5).IsIdentity());
  EXPECT_TRUE(s.conjugators.empty());
}

TEST_F(WitnessTest, SeparationRandom) {
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    std::size_t size = 2 + k % 3;
    std::vector<GroupElement> T;
    while (T.size() < size) {
      auto t = a5->Random(rng);
      if (std::find(T.begin(), T.end(), t) == T.end()) T.push_back(t);
    }
    GroupElement g = a5->Random(rng);
    while (std::find(T.begin(), T.end(), g) != T.end()) g = a5->Random(rng);
    auto s = MakeSeparationWord(*a5, T, g);
    for (const auto& t : T) ASSERT_TRUE(Evaluate(s.word, HomPoint{{t}}, *a5).IsIdentity());
    ASSERT_FALSE(Evaluate(s.word, HomPoint{{g}}, *a5).IsIdentity());
    ASSERT_TRUE(VerifySeparation(s, *a5));
    ASSERT_LE(s.word.FreeLength(), 3u * (1u << (size - 1)) - 2);
    ASSERT_EQ(s.conjugators.size(), size - 1);
    // Each h_i is the first element giving a non-trivial commutator.
    GroupElement w = T[0].Inverse() * g;
    for (std::size_t i = 1; i < size; ++i) {
      GroupElement base = T[i].Inverse() * g;
      for (const auto& h : F().elements()) {
        GroupElement b = h.Inverse() * base * h;
        GroupElement c = w.Inverse() * b.Inverse() * w * b;
        if (!c.IsIdentity()) {
          ASSERT_EQ(h, s.conjugators[i - 1]);
          w = c;
          break;
        }
      }
    }
  }
}

TEST_F(WitnessTest, SeparationErrors) {
  EXPECT_EQ(CodeOf([&] { MakeSeparationWord(*a5, {E("(0 1 2)")}, E("(0 1 2)")); }),
            ErrorCode::kPrecondition);
  EXPECT_EQ(CodeOf([&] { MakeSeparationWord(*a5, {}, E("(0 1 2)")); }),
            ErrorCode::kPrecondition);
  auto s5 = MakeGroup("S5");
  EXPECT_EQ(CodeOf([&] {
              MakeSeparationWord(*s5, {s5->Parse("(0 1)")}, s5->Parse("(0 1 2)"));
            }),
            ErrorCode::kPrecondition);
  std::vector<GroupElement> many(F().elements().begin() + 1, F().elements().begin() + 18);
  EXPECT_EQ(CodeOf([&] { MakeSeparationWord(*a5, many, F().At(30)); }),
            ErrorCode::kPrecondition);
  // Duplicates collapse.
  auto s = MakeSeparationWord(*a5, {E("(0 1 2)"), E("(0 1 2)")}, E("(0 1 3)"));
  EXPECT_EQ(s.excluded.size(), 1u);
}

TEST_F(WitnessTest, SeparationOverV) {
  Rng rng(43);
  for (int k = 0; k < 10; ++k) {
    std::vector<GroupElement> T{testing::RandomV(rng, 4), testing::RandomV(rng, 4)};
    if (T[0] == T[1]) continue;
    GroupElement g = testing::RandomV(rng, 4);
    if (g == T[0] || g == T[1]) continue;
    auto s = MakeSeparationWord(*v, T, g);
    ASSERT_TRUE(VerifySeparation(s, *v));
  }
}

// ---------------------------------------------------------------- conj_decompose

// Oracle: BFS over group elements (not indices) with all conjugates of u^{+-1}.
int BfsDistance(const PermutationGroup& f, const GroupElement& c, const GroupElement& u) {
  std::vector<GroupElement> steps;
  for (const auto& h : f.elements()) {
    steps.push_back(h.Inverse() * u * h);
    steps.push_back(h.Inverse() * u.Inverse() * h);
  }
  std::map<GroupElement, int> dist{{f.identity(), 0}};
  std::deque<GroupElement> q{f.identity()};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    if (x == c) return dist[x];
    for (const auto& s : steps) {
      auto y = x * s;
      if (dist.emplace(y, dist[x] + 1).second) q.push_back(y);
    }
  }
  return -1;
}

TEST_F(WitnessTest, ConjDecomposeFixtures) {
  GroupElement u = E("(0 1)(2 3)");
  EXPECT_TRUE(ConjDecompose(*a5, a5->identity(), u).factors.empty());
  auto d = ConjDecompose(*a5, u, u);
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].sign, 1);
  EXPECT_TRUE(d.factors[0].conjugator.IsIdentity());
  auto d2 = ConjDecompose(*a5, E("(0 1 2)"), u);
  EXPECT_EQ(Reconstruct(d2, *a5), E("(0 1 2)"));
  EXPECT_EQ(static_cast<int>(d2.factors.size()), BfsDistance(F(), E("(0 1 2)"), u));
}

TEST_F(WitnessTest, ConjDecomposeMinimal) {
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    GroupElement u = testing::NonIdentity(*a5, rng);
    GroupElement c = a5->Random(rng);
    auto d = ConjDecompose(*a5, c, u);
    ASSERT_EQ(Reconstruct(d, *a5), c);
    ASSERT_EQ(static_cast<int>(d.factors.size()), BfsDistance(F(), c, u));
  }
}

TEST_F(WitnessTest, ConjDecomposeErrors) {
  EXPECT_EQ(CodeOf([&] { ConjDecompose(*a5, E("(0 1 2)"), a5->identity()); }),
            ErrorCode::kPrecondition);
  auto vg = testing::NonIdentity(*v, *std::make_unique<Rng>(1));
  EXPECT_EQ(CodeOf([&] { ConjDecompose(*v, vg, vg); }), ErrorCode::kUnsupported);
  auto s4 = MakeGroup("S4");
  // (0 1) is outside the normal closure of (0 1)(2 3) in S4.
  EXPECT_EQ(CodeOf([&] { ConjDecompose(*s4, s4->Parse("(0 1)"), s4->Parse("(0 1)(2 3)")); }),
            ErrorCode::kPrecondition);
}

// ---------------------------------------------------------------- fixer

TEST_F(WitnessTest, SpecialSetCanonical) {
  auto s = SpecialSet::Canonical(*a5, 2, 3);
  ASSERT_EQ(s.t.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(s.t[i], F().At(i + 1));
  EXPECT_EQ(s.z, F().At(1));
  EXPECT_FALSE(s.Contains(s.Base(*a5), *a5));
  EXPECT_THROW(SpecialSet::Canonical(*a5, 2, 60), Error);
}

TEST_F(WitnessTest, FixerShortCircuit) {
  auto s = SpecialSet::Canonical(*a5, 2, 1);
  EXPECT_TRUE(FixerWitness(s, s.Base(*a5), *a5).genword().empty());
  EXPECT_EQ(CodeOf([&] { FixerWitness(s, s.Points(*a5)[0], *a5); }),
            ErrorCode::kPrecondition);
  EXPECT_EQ(CodeOf([&] { FixerWitness(s, s.Base(*v), *v); }), ErrorCode::kUnsupported);
}

TEST_F(WitnessTest, FixerPostconditions) {
  Rng rng(45);
  for (int k : {1, 3}) {
    auto s = SpecialSet::Canonical(*a5, 2, k);
    auto pts = s.Points(*a5);
    for (int it = 0; it < 50; ++it) {
      auto phi = testing::RandomPoint(*a5, 2, rng);
      if (k == 1 && it < 10) phi = HomPoint{{testing::NonIdentity(*a5, rng), a5->identity()}};
      if (std::find(pts.begin(), pts.end(), phi) != pts.end()) continue;
      auto g = FixerWitness(s, phi, *a5);
      for (const auto& p : pts) ASSERT_EQ(Act(p, g, *a5), p);
      ASSERT_EQ(Act(phi, g, *a5), s.Base(*a5));
    }
  }
}

TEST_F(WitnessTest, FixerRank3) {
  Rng rng(46);
  auto s = SpecialSet::Canonical(*a5, 3, 2);
  auto pts = s.Points(*a5);
  for (int it = 0; it < 30; ++it) {
    auto phi = testing::RandomPoint(*a5, 3, rng);
    if (std::find(pts.begin(), pts.end(), phi) != pts.end()) continue;
    auto g = FixerWitness(s, phi, *a5);
    for (const auto& p : pts) ASSERT_EQ(Act(p, g, *a5), p);
    ASSERT_EQ(Act(phi, g, *a5), s.Base(*a5));
  }
}

// ---------------------------------------------------------------- k-transitivity

TEST_F(WitnessTest, KTransitivityDelegatesForK1) {
  Rng rng(47);
  auto p = testing::RandomPoint(*a5, 2, rng);
  auto q = testing::RandomPoint(*a5, 2, rng);
  EXPECT_EQ(KTransitivityWitness({p}, {q}, *a5).genword(),
            TransitivityWitness(p, q).genword());
  auto src = DistinctPoints(3, 2, rng);
  EXPECT_TRUE(KTransitivityWitness(src, src, *a5).genword().empty());
}

TEST_F(WitnessTest, KTransitivityRandom) {
  Rng rng(48);
  for (int k : {1, 2, 3, 4, 6}) {
    int cases = k <= 3 ? 50 : 10;
    for (int it = 0; it < cases; ++it) {
      auto src = DistinctPoints(k, 2, rng);
      auto dst = DistinctPoints(k, 2, rng);
      auto a = KTransitivityWitness(src, dst, *a5);
      auto inv = Inverse(a);
      for (int j = 0; j < k; ++j) {
        ASSERT_EQ(Act(src[j], a, *a5), dst[j]) << "k=" << k;
        ASSERT_EQ(Act(dst[j], inv, *a5), src[j]) << "k=" << k;
      }
    }
  }
}

TEST_F(WitnessTest, KTransitivityRank3) {
  Rng rng(49);
  for (int it = 0; it < 10; ++it) {
    auto src = DistinctPoints(3, 3, rng);
    auto dst = DistinctPoints(3, 3, rng);
    auto a = KTransitivityWitness(src, dst, *a5);
    for (int j = 0; j < 3; ++j) ASSERT_EQ(Act(src[j], a, *a5), dst[j]);
  }
}

TEST_F(WitnessTest, KTransitivityErrors) {
  Rng rng(50);
  auto p = testing::RandomPoint(*a5, 2, rng);
  auto q = DistinctPoints(2, 2, rng);
  EXPECT_EQ(CodeOf([&] { KTransitivityWitness({p, p}, q, *a5); }), ErrorCode::kPrecondition);
  EXPECT_EQ(CodeOf([&] { KTransitivityWitness({p}, q, *a5); }), ErrorCode::kPrecondition);
  auto r1 = std::vector<HomPoint>{HomPoint{{E("(0 1 2)")}}, HomPoint{{E("(0 1 3)")}}};
  EXPECT_EQ(CodeOf([&] { KTransitivityWitness(r1, r1, *a5); }), ErrorCode::kPrecondition);
  auto vp = std::vector<HomPoint>{HomPoint::Trivial(*v, 2),
                                  HomPoint{{testing::NonIdentity(*v, rng), v->identity()}}};
  EXPECT_EQ(CodeOf([&] { KTransitivityWitness(vp, vp, *v); }), ErrorCode::kUnsupported);
}

// ---------------------------------------------------------------- retraction

TEST_F(WitnessTest, RetractionFixtures) {
  GroupElement g = E("(0 1 2)");
  auto mg = GAutomorphism::FromGenWord(2, {MultGGen{0, g}});
  EXPECT_TRUE(RetractionT(mg, *a5).IsIdentity());
  auto cj = GAutomorphism::FromGenWord(2, {ConjGen{0, g}});
  EXPECT_EQ(RetractionT(cj, *a5), cj);
  // x1 -> g x1.
  auto left = GAutomorphism::FromGenWord(2, {ConjGen{0, g.Inverse()}, MultGGen{0, g}});
  ASSERT_EQ(left.image(0).ToString(), "c{(0 1 2)} * x1");
  EXPECT_EQ(RetractionT(left, *a5).image(0).ToString(), "c{(0 1 2)} * x1 * c{(0 2 1)}");
  EXPECT_TRUE(RewriteToY({MultGGen{0, g}}, 2, *a5).empty());
  GenWord conj{ConjGen{0, g}};
  EXPECT_EQ(RewriteToY(conj, 2, *a5), conj);
}

TEST_F(WitnessTest, RetractionProperties) {
  Rng rng(51);
  for (const auto& g : {a5, v}) {
    const auto e = HomPoint::Trivial(*g, 2);
    for (int k = 0; k < 150; ++k) {
      auto a = GAutomorphism::FromGenWord(
          2, testing::RandomGenWord(*g, 2, 1 + static_cast<int>(rng() % 8), rng));
      auto t = RetractionT(a, *g);
      ASSERT_EQ(ActViaImages(e, t, *g), e);
      ASSERT_EQ(RetractionT(t, *g), t);
      if (Act(e, a, *g) == e) {
        ASSERT_EQ(t, a);
      }
    }
  }
}

TEST_F(WitnessTest, RewriteToYMatchesRetraction) {
  Rng rng(52);
  for (const auto& g : {a5, v}) {
    const auto e = HomPoint::Trivial(*g, 2);
    for (int k = 0; k < 150; ++k) {
      GenWord w = testing::RandomGenWord(*g, 2, 1 + static_cast<int>(rng() % 8), rng);
      GenWord y = RewriteToY(w, 2, *g);
      for (const auto& s : y) ASSERT_TRUE(InY(s)) << ToString(s);
      auto a = GAutomorphism::FromGenWord(2, w);
      auto ya = GAutomorphism::FromGenWord(2, y);
      ASSERT_EQ(ya, RetractionT(a, *g)) << ToString(w);
      ASSERT_EQ(Act(e, ya, *g), e);
      // Stabilizer elements come back unchanged.
      ASSERT_EQ(GAutomorphism::FromGenWord(2, RewriteToY(y, 2, *g)), ya);
      if (Act(e, a, *g) == e) {
        ASSERT_EQ(ya, a);
      }
    }
  }
}

// The inverse-sign multx rule must use g_j h g_i^-1 as conjugator; g_j != e
// exercises the difference.
TEST_F(WitnessTest, RewriteNegativeMultXWithNonTrivialSecondCoordinate) {
  GroupElement g1 = E("(0 1 2)"), g2 = E("(2 3 4)"), h = E("(0 1)(2 3)");
  GenWord w{MultGGen{0, g1}, MultGGen{1, g2}, MultXGen{0, 1, -1, h}};
  GenWord y = RewriteToY(w, 2, *a5);
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(std::get<MultXGen>(y[0]).h, g2 * h * g1.Inverse());
  EXPECT_EQ(GAutomorphism::FromGenWord(2, y),
            RetractionT(GAutomorphism::FromGenWord(2, w), *a5));
}

}  // namespace
}  // namespace gfa
