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

// Words in the free product G*F_n and G-homomorphisms G*F_n -> G.
//
// Text grammar (whitespace between terms is ignored):
//   word  := "1" | term ("*" term)*
//   term  := "x" INDEX ("^" INT)? | "c{" ELEMENT "}"
//   point := "[" ELEMENT (";" ELEMENT)* "]"
// Generator indices are 1-based in text and 0-based in code.

#ifndef GFA_FREE_PRODUCT_HPP_
#define GFA_FREE_PRODUCT_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "group.hpp"

namespace gfa {

using Exponent = boost::multiprecision::cpp_int;

// x_generator ^ exponent, exponent != 0.
struct Power {
  int generator = 0;
  Exponent exponent = 1;
  friend bool operator==(const Power&, const Power&) = default;
};

using Letter = std::variant<GroupElement, Power>;

// A word of G*F_n in normal form: no identity G-letters, no zero exponents,
// no two adjacent G-letters and no two adjacent powers of the same
// generator. A maximal run of powers is one freely reduced F_n-syllable, so
// the letter list is the alternating syllable sequence written out. Two
// words are equal in G*F_n iff their letter lists are identical.
class FreeProductWord {
 public:
  explicit FreeProductWord(int rank) : rank_(rank) {}

  // Normalizes an arbitrary letter sequence. Throws Error(kRankMismatch) if
  // some generator index is outside [0, rank).
  static FreeProductWord Reduce(int rank, const std::vector<Letter>& raw);
  static FreeProductWord Generator(int rank, int generator, Exponent exp = 1);
  static FreeProductWord Constant(int rank, const GroupElement& g);

  static FreeProductWord Parse(std::string_view text, int rank,
                               const Group& group);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool IsEmpty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  // Number of generator letters counted with multiplicity, saturating.
  std::size_t FreeLength() const;
  bool Mentions(int generator) const;

  std::string ToString() const;

  friend bool operator==(const FreeProductWord&,
                         const FreeProductWord&) = default;

 private:
  friend class WordBuilder;
  int rank_;
  std::vector<Letter> letters_;
};

// Incremental normal-form construction: letters are pushed onto a stack that
// cancels and merges against its top, so appending a whole word costs time
// linear in its length.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : word_(rank) {}
  explicit WordBuilder(FreeProductWord start) : word_(std::move(start)) {}

  void Append(const Letter& letter);
  void Append(const FreeProductWord& w);
  void AppendInverse(const FreeProductWord& w);
  // Appends w^e. Throws Error(kBoundExceeded) if the result would exceed
  // `max_letters`.
  void AppendPower(const FreeProductWord& w, const Exponent& e,
                   std::size_t max_letters);

  std::size_t length() const { return word_.letters_.size(); }
  FreeProductWord Build() && { return std::move(word_); }

 private:
  FreeProductWord word_;
};

FreeProductWord Concat(const FreeProductWord& u, const FreeProductWord& v);
FreeProductWord Invert(const FreeProductWord& u);

// g^e by repeated squaring.
GroupElement Pow(const GroupElement& g, const Exponent& e,
                 const GroupElement& identity);

// A G-homomorphism G*F_n -> G, given by the images of x_1..x_n.
struct HomPoint {
  std::vector<GroupElement> images;

  int rank() const { return static_cast<int>(images.size()); }
  std::string ToString() const;
  static HomPoint Parse(std::string_view text, const Group& group);
  // (e, ..., e): the point sending every x_i to 1.
  static HomPoint Trivial(const Group& group, int rank);

  friend bool operator==(const HomPoint&, const HomPoint&) = default;
};

// Substitutes x_i -> phi(x_i), keeps G-letters and multiplies left to right.
GroupElement Evaluate(const FreeProductWord& w, const HomPoint& phi,
                      const Group& group);

// The G-coordinate of w in G*F_n = <<F_n>> x| G, i.e. Evaluate at (e,...,e).
GroupElement Pi(const FreeProductWord& w, const Group& group);

// The <<F_n>>-coordinate: w * Pi(w)^-1. Not a homomorphism; it satisfies
// TPart(Invert(w)) == Pi(w)^-1 * Invert(TPart(w)) * Pi(w).
FreeProductWord TPart(const FreeProductWord& w, const Group& group);

// The image of w in F_n obtained by deleting every G-letter.
FreeProductWord KillG(const FreeProductWord& w);

}  // namespace gfa

#endif  // GFA_FREE_PRODUCT_HPP_
