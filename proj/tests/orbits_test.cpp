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

#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"
#include "orbits.hpp"
#include "support.hpp"
#include "witnesses.hpp"

namespace gfa {
namespace {

using testing::Rng;

class OrbitTest : public ::testing::Test {
 protected:
  GroupPtr a5 = MakeGroup("A5");
  const PermutationGroup& F() { return *a5->AsFinite(); }
};

std::uint64_t Sum(const std::vector<std::uint64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

TEST_F(OrbitTest, PointsA5) {
  auto r1 = OrbitsOnPoints(F(), 1);
  EXPECT_EQ(r1.num_orbits, 1u);
  EXPECT_EQ(r1.sizes, std::vector<std::uint64_t>{60});
  auto r2 = OrbitsOnPoints(F(), 2);
  EXPECT_EQ(r2.state_space_size, 3600u);
  EXPECT_EQ(r2.num_orbits, 1u);
  EXPECT_EQ(r2.sizes, std::vector<std::uint64_t>{3600});
  EXPECT_EQ(r2.representatives, std::vector<std::uint64_t>{0});
}

TEST_F(OrbitTest, RankZeroRejected) {
  try {
    OrbitsOnPoints(F(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

// Oracle: union-find over pair states, images computed by Act on elements.
std::vector<std::uint64_t> PairOrbitSizesByUnionFind(const PermutationGroup& f,
                                                     int rank) {
  std::uint64_t points = 1;
  for (int k = 0; k < rank; ++k) points *= f.order();
  const std::uint64_t total = points * points;
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto gens = DefaultOrbitGenerators(f, rank);
  for (std::uint64_t a = 0; a < points; ++a) {
    HomPoint p = PointFromIndex(f, rank, a);
    for (std::uint64_t b = 0; b < points; ++b) {
      HomPoint q = PointFromIndex(f, rank, b);
      for (const auto& g : gens) {
        std::uint64_t t = PointIndex(f, Act(p, g)) * points + PointIndex(f, Act(q, g));
        parent[find(a * points + b)] = find(t);
      }
    }
  }
  std::map<std::uint64_t, std::uint64_t> count;
  for (std::uint64_t s = 0; s < total; ++s) ++count[find(s)];
  std::vector<std::uint64_t> sizes;
  for (const auto& [root, n] : count) sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

TEST_F(OrbitTest, PairsMatchUnionFind) {
  EXPECT_EQ(OrbitsOnPairs(F(), 1).sizes, PairOrbitSizesByUnionFind(F(), 1));
  auto s3 = MakeGroup("S3");
  EXPECT_EQ(OrbitsOnPairs(*s3->AsFinite(), 2).sizes,
            PairOrbitSizesByUnionFind(*s3->AsFinite(), 2));
  auto a4 = MakeGroup("A4");
  EXPECT_EQ(OrbitsOnPairs(*a4->AsFinite(), 2).sizes,
            PairOrbitSizesByUnionFind(*a4->AsFinite(), 2));
}

// With one free generator the diagonal is still its own orbit, but the
// off-diagonal splits.
TEST_F(OrbitTest, PairsA5RankOne) {
  OrbitOptions o;
  o.keep_labels = true;
  auto r = OrbitsOnPairs(F(), 1, o);
  EXPECT_GT(r.num_orbits, 2u);
  EXPECT_EQ(r.labels[0], 0u);
  for (std::uint64_t s = 0; s < 60; ++s) ASSERT_EQ(r.labels[s * 61], 0u);
  EXPECT_EQ(r.sizes.back(), 60u);
  EXPECT_EQ(Sum(r.sizes), 3600u);
}

TEST_F(OrbitTest, DiagonalIsAUnionOfOrbitsForNonSimpleGroups) {
  for (const char* spec : {"S4", "C4", "A4", "S3"}) {
    auto g = MakeGroup(spec);
    const auto& f = *g->AsFinite();
    OrbitOptions o;
    o.keep_labels = true;
    auto r = OrbitsOnPairs(f, 2, o);
    ASSERT_EQ(Sum(r.sizes), r.state_space_size);
    const std::uint64_t points = f.order() * f.order();
    std::vector<int> kind(r.num_orbits, -1);
    for (std::uint64_t s = 0; s < r.state_space_size; ++s) {
      int diag = s / points == s % points;
      int& k = kind[r.labels[s]];
      if (k == -1) k = diag;
      ASSERT_EQ(k, diag) << spec;
    }
  }
}

TEST_F(OrbitTest, WorkerCountDoesNotChangeTheReport) {
  auto s4 = MakeGroup("S4");
  OrbitOptions one, four;
  four.threads = 4;
  auto a = OrbitsOnPairs(*s4->AsFinite(), 2, one);
  auto b = OrbitsOnPairs(*s4->AsFinite(), 2, four);
  EXPECT_EQ(a.checksum, b.checksum);
  EXPECT_EQ(a.sizes, b.sizes);
  EXPECT_EQ(a.representatives, b.representatives);
  auto c = OrbitsOnPairs(*s4->AsFinite(), 2, one);
  EXPECT_EQ(a.checksum, c.checksum);
}

// Every generator keeps every sampled state in its orbit; the image is
// computed by Act on group elements, not by the index engine.
void SpotCheck(const PermutationGroup& f, int rank, Rng& rng, int samples) {
  OrbitOptions o;
  o.keep_labels = true;
  auto r = OrbitsOnPoints(f, rank, o);
  auto gens = DefaultOrbitGenerators(f, rank);
  for (int k = 0; k < samples; ++k) {
    std::uint64_t s = rng() % r.state_space_size;
    const XGen& g = gens[rng() % gens.size()];
    HomPoint p = PointFromIndex(f, rank, s);
    ASSERT_EQ(PointIndex(f, p), s);
    std::uint64_t t = PointIndex(f, Act(p, g));
    ASSERT_EQ(r.labels[s], r.labels[t]);
  }
}

TEST_F(OrbitTest, PartitionSpotCheck) {
  Rng rng(71);
  SpotCheck(F(), 2, rng, 100000);
  SpotCheck(*MakeGroup("S4")->AsFinite(), 2, rng, 20000);
  SpotCheck(*MakeGroup("C4")->AsFinite(), 3, rng, 20000);
}

TEST_F(OrbitTest, ExtraGeneratorsDoNotChangeOrbitCounts) {
  Rng rng(72);
  for (const char* spec : {"A5", "S4", "A4"}) {
    auto g = MakeGroup(spec);
    const auto& f = *g->AsFinite();
    auto base = OrbitsOnPoints(f, 2);
    OrbitOptions o;
    for (int k = 0; k < 10; ++k) o.extra_generators.push_back(testing::RandomXGen(*g, 2, rng));
    auto more = OrbitsOnPoints(f, 2, o);
    EXPECT_EQ(base.num_orbits, more.num_orbits) << spec;
    EXPECT_EQ(base.sizes, more.sizes) << spec;
    EXPECT_EQ(more.generators.size(), base.generators.size() + 10);
  }
}

TEST_F(OrbitTest, DefaultGenerators) {
  auto g3 = DefaultOrbitGenerators(F(), 3);
  std::vector<std::string> text;
  for (const auto& s : g3) text.push_back(ToString(s));
  std::vector<std::string> want{"sigma(2 1 3)",      "sigma(2 3 1)",
                                "inv(1)",            "multx(1,2,+)",
                                "multx(1,2,-)",      "conj(1){(0 1 2)}",
                                "multg(1){(0 1 2)}", "conj(1){(0 1 2 3 4)}",
                                "multg(1){(0 1 2 3 4)}"};
  EXPECT_EQ(text, want);
  EXPECT_EQ(DefaultOrbitGenerators(F(), 1).size(), 5u);
}

TEST_F(OrbitTest, Caps) {
  OrbitOptions o;
  o.max_states = 1000;
  try {
    OrbitsOnPoints(F(), 2, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
  setenv("GFA_MAX_STATES", "100", 1);
  EXPECT_THROW(OrbitsOnPoints(F(), 2), Error);
  EXPECT_NO_THROW(OrbitsOnPoints(F(), 1));
  unsetenv("GFA_MAX_STATES");
  EXPECT_THROW(OrbitsOnPairs(F(), 3), Error);  // 60^6 > 2e7
}

TEST_F(OrbitTest, OffDiagonalPairsHaveTwoTupleWitnesses) {
  Rng rng(73);
  for (int k = 0; k < 100; ++k) {
    auto p = testing::RandomPoint(*a5, 2, rng);
    auto q = testing::RandomPoint(*a5, 2, rng);
    auto r = testing::RandomPoint(*a5, 2, rng);
    auto s = testing::RandomPoint(*a5, 2, rng);
    if (p == q || r == s) continue;
    auto a = KTransitivityWitness({p, q}, {r, s}, *a5);
    ASSERT_EQ(Act(p, a, *a5), r);
    ASSERT_EQ(Act(q, a, *a5), s);
  }
}

}  // namespace
}  // namespace gfa
