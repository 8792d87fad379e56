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

// Constructive witnesses for the action of Aut_G(G*F_n) on
// Hom_G(G*F_n, G): transitivity, separation words, conjugate
// decompositions, pointwise-fixer witnesses, k-transitivity, and the
// retraction onto the stabilizer of the trivial point.
//
// Every search takes the first admissible element of Group::SearchSpace, so
// results are reproducible.

#ifndef GFA_WITNESSES_HPP_
#define GFA_WITNESSES_HPP_

#include <cstddef>
#include <vector>

#include "automorphism.hpp"
#include "free_product.hpp"
#include "group.hpp"

namespace gfa {

struct WitnessOptions {
  // Search radius used for V; finite groups are always scanned completely.
  int v_radius = 3;
  // Separation words double in length per excluded element.
  std::size_t max_excluded = 16;
};

// x_i -> x_i (phi(x_i)^-1 psi(x_i)) for every i, as multg generators.
// Act(phi, result) == psi.
GAutomorphism TransitivityWitness(const HomPoint& phi, const HomPoint& psi);

// A rank-1 word w(x) with w(t) == e for every excluded t and w(target) != e.
struct SeparationWord {
  FreeProductWord word{1};
  std::vector<GroupElement> excluded;  // deduplicated, input order
  GroupElement target;
  // h_2, ..., h_k: w_i = [w_{i-1}, (t_i^-1 x)^{h_i}], [a,b] = a^-1 b^-1 a b,
  // a^h = h^-1 a h.
  std::vector<GroupElement> conjugators;
};

// Builds w_1 = t_1^-1 x and then the nested commutators above, choosing each
// h_i as the first element with [w_{i-1}(g), (t_i^-1 g)^{h_i}] != e. The word
// has at most 3 * 2^(k-1) - 2 letters x^{+-1}; free reduction may cancel some.
//
// Errors: kPrecondition if target is excluded, nothing is excluded, the
// backend is not simple with trivial center, or |T| > max_excluded;
// kBoundExceeded if V's search ball runs out.
SeparationWord MakeSeparationWord(const Group& group,
                                  const std::vector<GroupElement>& excluded,
                                  const GroupElement& target,
                                  const WitnessOptions& options = {});

// Independent re-check of the defining property by evaluation.
bool VerifySeparation(const SeparationWord& s, const Group& group);

struct ConjFactor {
  int sign;  // +1 or -1
  GroupElement conjugator;
};

// target == product over factors of base^{sign * conjugator}, where
// u^{+h} = h^-1 u h and u^{-h} = h^-1 u^-1 h.
struct ConjDecomposition {
  GroupElement base;
  GroupElement target;
  std::vector<ConjFactor> factors;
};

// Shortest decomposition of `target` into conjugates of `base` and its
// inverse, by breadth-first search over G. Finite groups only
// (kUnsupported otherwise); kPrecondition if base is the identity or target
// lies outside the normal closure of base.
ConjDecomposition ConjDecompose(const Group& group, const GroupElement& target,
                                const GroupElement& base);
GroupElement Reconstruct(const ConjDecomposition& d, const Group& group);

// The points phi_i = (t_i, e, ..., e) together with the base point
// phi_z = (e, z, e, ..., e).
struct SpecialSet {
  int rank = 2;
  std::vector<GroupElement> t;
  GroupElement z;

  // t = the first k non-identity elements, z = the first non-identity
  // element.
  static SpecialSet Canonical(const Group& group, int rank, std::size_t k);
  std::vector<HomPoint> Points(const Group& group) const;
  HomPoint Base(const Group& group) const;
  bool Contains(const HomPoint& phi, const Group& group) const;
};

// An automorphism fixing every point of `special` and sending phi to the
// base point. Finite simple backends, rank >= 2, phi outside the set.
GAutomorphism FixerWitness(const SpecialSet& special, const HomPoint& phi,
                           const Group& group,
                           const WitnessOptions& options = {});

// An automorphism with Act(src[j], result) == dst[j] for all j. k == 1 is
// TransitivityWitness; larger k uses the fixer witnesses of canonical
// special sets.
GAutomorphism KTransitivityWitness(const std::vector<HomPoint>& src,
                                   const std::vector<HomPoint>& dst,
                                   const Group& group,
                                   const WitnessOptions& options = {});

// T(a): x_i -> TPart(a(x_i)). Lands in the stabilizer of (e, ..., e) and is
// the identity there. The result carries images only; RewriteToY provides a
// generator word for it.
GAutomorphism RetractionT(const GAutomorphism& a, const Group& group);

// Scans the word left to right, maintaining T(prefix) as a word in Y:
//   sigma, conj:       T(a s) = T(a) s
//   inv(i):            T(a s) = T(a) s conj(i){g_i}
//   multx(i,j,+){h}:   T(a s) = T(a) multx(i,j,+){h g_i^-1}
//   multx(i,j,-){h}:   T(a s) = T(a) multx(i,j,-){g_j h g_i^-1}
//   multg:             T(a s) = T(a)
// where g_k is the G-coordinate of a(x_k). The output contains no multg.
GenWord RewriteToY(const GenWord& word, int rank, const Group& group);

}  // namespace gfa

#endif  // GFA_WITNESSES_HPP_
