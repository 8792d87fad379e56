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

// Concrete groups G behind one interface: finite permutation groups and
// Thompson's group V.
//
// Convention, used by every module: a * b means "a first, then b" when the
// elements are read as maps. Automorphisms of G*F_n are composed the other
// way round (see automorphism.hpp); the two conventions never mix because G
// elements only ever appear as letters inside words.

#ifndef GFA_GROUP_HPP_
#define GFA_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "permutation.hpp"
#include "prefix_map.hpp"

namespace gfa {

class GroupElement {
 public:
  using Payload = std::variant<Permutation, PrefixExchangeMap>;

  GroupElement() = default;  // degree-0 permutation; placeholder only
  GroupElement(Permutation p) : payload_(std::move(p)) {}
  GroupElement(PrefixExchangeMap m) : payload_(std::move(m)) {}

  const Payload& payload() const { return payload_; }
  bool IsIdentity() const;
  GroupElement Inverse() const;
  // Throws Error(kBackendMismatch) when the payloads differ in kind or degree.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  std::string ToString() const;
  std::size_t Hash() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.payload_ < b.payload_;
  }

 private:
  Payload payload_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.Hash(); }
};

class PermutationGroup;

class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  // Parses an element in the backend's text form and checks membership.
  virtual GroupElement Parse(std::string_view text) const = 0;
  virtual bool IsFinite() const = 0;
  virtual const PermutationGroup* AsFinite() const { return nullptr; }

  // The deterministic order in which witness searches scan G. Finite groups
  // return their full canonical enumeration and ignore `radius`; V returns
  // the word-metric ball of that radius.
  virtual std::vector<GroupElement> SearchSpace(int radius) const = 0;

  virtual GroupElement Random(std::mt19937_64& rng) const = 0;

  // Hypotheses used by the witness constructions. For V these are known
  // facts and are not recomputed.
  virtual bool IsSimple() const = 0;
  virtual bool HasTrivialCenter() const = 0;
  bool IsTrivial() const;
};

using GroupPtr = std::shared_ptr<const Group>;

// A finite group of permutations of {0, ..., degree-1} with a cached
// canonical enumeration.
//
// Canonical order: breadth-first over the Cayley graph of the generators,
// each distance layer sorted by cycle-notation string. Index 0 is the
// identity. Witness searches that "take the first admissible element" scan
// in this order.
class PermutationGroup : public Group {
 public:
  static constexpr std::size_t kDefaultElementCap = 100000;

  // Throws Error(kBoundExceeded) if the group has more than `cap` elements.
  PermutationGroup(std::string name, int degree,
                   std::vector<Permutation> generators,
                   std::size_t cap = kDefaultElementCap);

  std::string name() const override { return name_; }
  GroupElement identity() const override { return elements_[0]; }
  GroupElement Parse(std::string_view text) const override;
  bool IsFinite() const override { return true; }
  const PermutationGroup* AsFinite() const override { return this; }
  std::vector<GroupElement> SearchSpace(int radius) const override;
  GroupElement Random(std::mt19937_64& rng) const override;
  bool IsSimple() const override;
  bool HasTrivialCenter() const override;

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& At(int index) const { return elements_[index]; }
  // -1 when `g` is not in the group.
  int IndexOf(const GroupElement& g) const;
  int IndexOfGenerator(std::size_t k) const { return generator_index_[k]; }

  // Index arithmetic. Mul(i, j) is the index of At(i) * At(j).
  int Mul(int i, int j) const;
  int Inv(int i) const { return inverse_[i]; }
  int ElementOrder(int i) const { return element_order_[i]; }
  // Least common multiple of all element orders (the exponent of G).
  std::uint64_t Exponent() const;

  // True iff the normal closure of every non-identity conjugacy class is the
  // whole group. The trivial group is reported as not simple.
  bool CheckSimplicity() const;
  // True iff only the identity commutes with every generator.
  bool CenterIsTrivial() const;

 private:
  void BuildTable() const;

  std::string name_;
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, int, GroupElementHash> index_;
  std::vector<int> generator_index_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> table_;
  mutable std::once_flag simple_once_;
  mutable bool simple_ = false;
};

// Thompson's group V as reduced prefix-exchange maps.
class ThompsonV : public Group {
 public:
  static constexpr int kDefaultMaxRadius = 6;

  explicit ThompsonV(int max_radius = kDefaultMaxRadius)
      : max_radius_(max_radius) {}

  // The pinned generating set {A, B, C, pi0}:
  //   A   = V{0,10,11 -> 00,01,1}
  //   B   = V{0,10,110,111 -> 0,100,101,11}
  //   C   = V{0,10,11 -> 11,0,10}
  //   pi0 = V{0,10,11 -> 0,11,10}
  static const std::vector<PrefixExchangeMap>& StandardGenerators();

  std::string name() const override { return "V"; }
  GroupElement identity() const override { return PrefixExchangeMap(); }
  GroupElement Parse(std::string_view text) const override;
  bool IsFinite() const override { return false; }
  std::vector<GroupElement> SearchSpace(int radius) const override {
    return EnumerateBall(radius);
  }
  // Product of a uniformly random word of length 1..8 in the generators.
  GroupElement Random(std::mt19937_64& rng) const override;
  bool IsSimple() const override { return true; }
  bool HasTrivialCenter() const override { return true; }

  // All elements of word length <= radius over the generators and their
  // inverses, deduplicated, in shortlex order of their least word (generator
  // order A, B, C, pi0, A^-1, B^-1, C^-1, pi0^-1). Throws Error(kBoundExceeded)
  // when radius exceeds max_radius().
  std::vector<GroupElement> EnumerateBall(int radius) const;
  int max_radius() const { return max_radius_; }

 private:
  int max_radius_;
};

// Builds a backend from a name: "A<n>", "S<n>", "C<n>", "trivial", "V", or
// "gens:<perm>;<perm>;..." for the permutation group generated by the list.
GroupPtr MakeGroup(std::string_view spec);

// Fails with Error(kPrecondition) unless `g` is non-trivial, simple and has
// trivial center; these are the standing hypotheses of the witness
// constructions.
void RequireAdmissible(const Group& g);

}  // namespace gfa

#endif  // GFA_GROUP_HPP_
