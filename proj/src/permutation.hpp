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

#ifndef GFA_PERMUTATION_HPP_
#define GFA_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfa {

// A permutation of {0, ..., degree-1}, stored as its image list.
//
// Products follow the map convention used throughout the library:
// a * b means "apply a, then b", so (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation Identity(int degree);

  // Parses disjoint cycle notation such as "(0 1 2)(3 4)" or "e". Points must
  // lie in [0, degree). Throws Error(kParse) on malformed input.
  static Permutation Parse(std::string_view text, int degree);
  // Smallest degree that can hold every point mentioned in `text`.
  static int InferDegree(std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  std::span<const std::uint16_t> images() const { return images_; }

  bool IsIdentity() const;
  Permutation Inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // Cycle notation, fixed points omitted, each cycle starting at its least
  // point; identity prints as "e".
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

}  // namespace gfa

#endif  // GFA_PERMUTATION_HPP_
