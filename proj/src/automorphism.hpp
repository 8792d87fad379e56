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

// G-automorphisms of G*F_n and their right action on Hom_G(G*F_n, G).
//
// Composition convention: (a o b)(w) = a(b(w)), so b acts first on words. A
// generator word [s_1, ..., s_m] denotes s_1 o s_2 o ... o s_m (rightmost
// applied first to words). Concatenating generator words is composition.
//
// The action on points is precomposition, act(phi, a) = phi o a, which is a
// right action: act(act(phi, a), b) == act(phi, a o b). Consequently a
// generator word acts on points left to right.
//
// Generator text forms (indices 1-based, whitespace separated):
//   sigma(p1 ... pn)     x_i -> x_{p_i}
//   inv(i)               x_i -> x_i^-1
//   conj(i){g}           x_i -> g^-1 x_i g
//   multx(i,j,+|-){h}    x_i -> x_i h^-1 x_j^(+1|-1) h   ({h} omitted: h = e)
//   multg(i){g}          x_i -> x_i g
// All other x_k are fixed. The empty word prints as "id".

#ifndef GFA_AUTOMORPHISM_HPP_
#define GFA_AUTOMORPHISM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "free_product.hpp"
#include "group.hpp"

namespace gfa {

struct PermuteBasis {
  std::vector<int> images;  // x_k -> x_{images[k]}
  friend bool operator==(const PermuteBasis&, const PermuteBasis&) = default;
};
struct InvertGen {
  int i;
  friend bool operator==(const InvertGen&, const InvertGen&) = default;
};
struct ConjGen {
  int i;
  GroupElement g;
  friend bool operator==(const ConjGen&, const ConjGen&) = default;
};
struct MultXGen {
  int i;
  int j;
  int sign;                        // +1 or -1
  std::optional<GroupElement> h;   // absent means h = e
  friend bool operator==(const MultXGen&, const MultXGen&) = default;
};
struct MultGGen {
  int i;
  GroupElement g;
  friend bool operator==(const MultGGen&, const MultGGen&) = default;
};

// One generator from the set X. The indexed forms are macros over the
// literal generators (sigma, inv(1), conj(1){g}, multx(1,2,+|-), multg(1){g});
// see ExpandLiteral. Y is X without the multg family.
using XGen = std::variant<PermuteBasis, InvertGen, ConjGen, MultXGen, MultGGen>;
using GenWord = std::vector<XGen>;

XGen InverseOf(const XGen& s);
bool InY(const XGen& s);
bool IsLiteral(const XGen& s);
// Throws Error(kPrecondition) if indices are out of range or malformed.
void Validate(const XGen& s, int rank);
std::string ToString(const XGen& s);
std::string ToString(const GenWord& w);
GenWord ParseGenWord(std::string_view text, int rank, const Group& group);

// Rewrites a generator word into literal generators with the same
// automorphism:
//   inv(i), conj(i){g}, multg(i){g}: conjugate the index-1 form by the
//     transposition (1 i);
//   multx(i,j,s){h}: rho o M o rho^-1, rho a basis permutation with
//     x_1 -> x_i, x_2 -> x_j, and M = conj(2){h} o multx(1,2,s) o conj(2){h^-1}.
GenWord ExpandLiteral(const GenWord& w, int rank);

// Generators realising x_i -> x_i W for a word W that does not involve x_i.
// The maps x_i -> x_i W form a copy of the subgroup of G*F_n that W lives in,
// so W is emitted letter by letter. Throws Error(kBoundExceeded) if W has
// more than `max_letters` generator letters.
GenWord RightMultiplyBy(int i, const FreeProductWord& w,
                        std::size_t max_letters = 1 << 20);

class GAutomorphism {
 public:
  // Image materialisation stops with Error(kBoundExceeded) past this many
  // letters summed over all images. Long witness words can have images far
  // beyond any memory budget; everything except image-based operations
  // works from the generator word alone.
  static constexpr std::size_t kImageLetterCap = std::size_t{1} << 22;

  static GAutomorphism Identity(int rank);
  static GAutomorphism FromGenWord(int rank, GenWord word);
  // An endomorphism given only by images. It is accepted by Apply and Act,
  // but Inverse rejects it with Error(kNotInvertible).
  static GAutomorphism FromImages(std::vector<FreeProductWord> images);

  int rank() const { return rank_; }
  bool has_genword() const { return genword_.has_value(); }
  const GenWord& genword() const;

  const std::vector<FreeProductWord>& images() const;
  const FreeProductWord& image(int i) const { return images()[i]; }
  bool IsIdentity() const;

  friend bool operator==(const GAutomorphism& a, const GAutomorphism& b);

 private:
  struct ImageCache;
  GAutomorphism(int rank, std::optional<GenWord> genword,
                std::shared_ptr<ImageCache> cache);

  int rank_;
  std::optional<GenWord> genword_;
  std::shared_ptr<ImageCache> cache_;
};

// a applied to w: x_i -> a(x_i), G fixed.
FreeProductWord Apply(const GAutomorphism& a, const FreeProductWord& w);
// (a o b)(w) = a(b(w)).
GAutomorphism Compose(const GAutomorphism& a, const GAutomorphism& b);
GAutomorphism Inverse(const GAutomorphism& a);

// phi o a. Uses the generator word when present (no image materialisation),
// the images otherwise.
HomPoint Act(const HomPoint& phi, const GAutomorphism& a, const Group& group);
HomPoint Act(const HomPoint& phi, const XGen& s);
// phi o a computed from the images, i.e. by evaluating a(x_i) at phi. An
// independent route for checking Act.
HomPoint ActViaImages(const HomPoint& phi, const GAutomorphism& a,
                      const Group& group);

// x_1 -> x_1 g, other x_i fixed: the embedding of G into Aut_G(G*F_n).
GAutomorphism EmbedG(const GroupElement& g, int rank);

enum class FreeProductSide { kA, kB };
// Side A: x_1 -> x_1 g. Side B: x_1 -> x_1 (x_2^-1 g x_2). Together they
// embed G*G. Requires rank >= 2.
GAutomorphism EmbedFreeProductPair(const GroupElement& g, FreeProductSide side,
                                   int rank);

}  // namespace gfa

#endif  // GFA_AUTOMORPHISM_HPP_
