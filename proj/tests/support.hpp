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

// Seeded random inputs and brute-force oracles shared by the test binaries.

#ifndef GFA_TESTS_SUPPORT_HPP_
#define GFA_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "free_product.hpp"
#include "group.hpp"

namespace gfa::testing {

using Rng = std::mt19937_64;

inline GroupElement NonIdentity(const Group& g, Rng& rng) {
  for (;;) {
    GroupElement x = g.Random(rng);
    if (!x.IsIdentity()) return x;
  }
}

inline HomPoint RandomPoint(const Group& g, int rank, Rng& rng) {
  HomPoint p;
  for (int i = 0; i < rank; ++i) p.images.push_back(g.Random(rng));
  return p;
}

// Up to `len` raw letters, G-letters and powers x_i^{+-1..3} mixed.
inline FreeProductWord RandomWord(const Group& g, int rank, int len, Rng& rng) {
  std::vector<Letter> raw;
  std::uniform_int_distribution<int> coin(0, 1), gen(0, rank - 1), ex(1, 3);
  for (int k = 0; k < len; ++k) {
    if (coin(rng)) {
      raw.push_back(g.Random(rng));
    } else {
      int e = ex(rng) * (coin(rng) ? 1 : -1);
      raw.push_back(Power{gen(rng), e});
    }
  }
  return FreeProductWord::Reduce(rank, raw);
}

inline XGen RandomXGen(const Group& g, int rank, Rng& rng, bool allow_multg = true) {
  std::uniform_int_distribution<int> kind(0, allow_multg ? 4 : 3), idx(0, rank - 1);
  switch (kind(rng)) {
    case 0: {
      std::vector<int> p(rank);
      for (int k = 0; k < rank; ++k) p[k] = k;
      std::shuffle(p.begin(), p.end(), rng);
      return PermuteBasis{p};
    }
    case 1:
      return InvertGen{idx(rng)};
    case 2:
      return ConjGen{idx(rng), NonIdentity(g, rng)};
    case 3: {
      if (rank < 2) return InvertGen{0};
      int i = idx(rng), j = idx(rng);
      while (j == i) j = idx(rng);
      GroupElement h = g.Random(rng);
      std::optional<GroupElement> oh;
      if (!h.IsIdentity()) oh = h;
      return MultXGen{i, j, std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1, oh};
    }
    default:
      return MultGGen{idx(rng), NonIdentity(g, rng)};
  }
}

inline GenWord RandomGenWord(const Group& g, int rank, int len, Rng& rng,
                             bool allow_multg = true) {
  GenWord w;
  for (int k = 0; k < len; ++k) w.push_back(RandomXGen(g, rank, rng, allow_multg));
  return w;
}

// A tree-pair diagram: leaves of two binary trees with the same leaf count,
// matched by a bijection. Built by random caret splitting, independently of
// the prefix-map code.
struct TreePair {
  std::vector<std::string> domain;
  std::vector<std::string> range;  // range[k] is the image leaf of domain[k]

  static std::vector<std::string> RandomTree(int leaves, Rng& rng) {
    std::vector<std::string> t{""};
    while (static_cast<int>(t.size()) < leaves) {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
      std::string s = t[k];
      t.erase(t.begin() + k);
      t.push_back(s + "0");
      t.push_back(s + "1");
    }
    return t;
  }

  static TreePair Random(int leaves, Rng& rng) {
    TreePair p{RandomTree(leaves, rng), RandomTree(leaves, rng)};
    std::shuffle(p.range.begin(), p.range.end(), rng);
    return p;
  }

  // Walks the domain leaves; nullopt if s stops inside the tree.
  std::optional<std::string> Apply(const std::string& s) const {
    for (std::size_t k = 0; k < domain.size(); ++k) {
      if (s.compare(0, domain[k].size(), domain[k]) == 0 &&
          s.size() >= domain[k].size()) {
        return range[k] + s.substr(domain[k].size());
      }
    }
    return std::nullopt;
  }

  PrefixExchangeMap ToMap() const { return PrefixExchangeMap(domain, range); }
};

inline std::string RandomBits(int len, Rng& rng) {
  std::string s;
  std::uniform_int_distribution<int> bit(0, 1);
  for (int k = 0; k < len; ++k) s += static_cast<char>('0' + bit(rng));
  return s;
}

inline GroupElement RandomV(Rng& rng, int max_leaves = 6) {
  int leaves = std::uniform_int_distribution<int>(1, max_leaves)(rng);
  return GroupElement(TreePair::Random(leaves, rng).ToMap());
}

}  // namespace gfa::testing

#endif  // GFA_TESTS_SUPPORT_HPP_
