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

#ifndef GFA_PREFIX_MAP_HPP_
#define GFA_PREFIX_MAP_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfa {

// An element of Thompson's group V: a homeomorphism of Cantor space {0,1}^N
// that replaces the prefix domain[i] of a sequence by range[i]. Both sides
// are complete finite prefix codes over {0,1}, written as strings of '0' and
// '1' characters.
//
// Instances are always reduced (no sibling pair u0 -> v0, u1 -> v1 remains)
// and pairs are sorted by domain string, which makes the representation
// canonical: two maps are the same element of V iff their pairs are equal.
//
// Multiplication is "apply a, then b": (a * b).Apply(s) == b.Apply(a.Apply(s)).
class PrefixExchangeMap {
 public:
  using Pair = std::pair<std::string, std::string>;

  // The identity, represented by the single pair (empty -> empty).
  PrefixExchangeMap();

  // Validates that both sides are complete prefix codes of equal size and
  // reduces. Throws Error(kParse) otherwise.
  PrefixExchangeMap(std::vector<std::string> domain,
                    std::vector<std::string> range);

  // "V{00,01,1 -> 1,00,01}" (pairing by position) or "e".
  static PrefixExchangeMap Parse(std::string_view text);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool IsIdentity() const;

  PrefixExchangeMap Inverse() const;
  friend PrefixExchangeMap operator*(const PrefixExchangeMap& a,
                                     const PrefixExchangeMap& b);

  // Image of the finite prefix `s` of a sequence. Empty when `s` is shorter
  // than the domain leaf it falls under, i.e. the image is not determined.
  std::optional<std::string> Apply(std::string_view s) const;

  std::string ToString() const;

  friend bool operator==(const PrefixExchangeMap&,
                         const PrefixExchangeMap&) = default;
  friend auto operator<=>(const PrefixExchangeMap&,
                          const PrefixExchangeMap&) = default;

  // Merges sibling carets until none remain, then sorts. Exposed for tests;
  // every constructor already applies it.
  static std::vector<Pair> Reduce(std::vector<Pair> pairs);

  // True iff `code` is an antichain that every infinite binary sequence
  // meets exactly once.
  static bool IsCompletePrefixCode(std::vector<std::string> code);

 private:
  struct Trusted {};
  PrefixExchangeMap(Trusted, std::vector<Pair> pairs);

  std::vector<Pair> pairs_;
};

}  // namespace gfa

#endif  // GFA_PREFIX_MAP_HPP_
