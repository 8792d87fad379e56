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

// Mixed identities (laws with constants), kernel elements of the action on
// Hom_G(G*F_n, G), and faithfulness witnesses.
//
// Substitutions are scanned in lexicographic order of element indices (x_1
// most significant) over G for finite backends and over the search ball for
// V, so the reported counterexample is always the smallest one.

#ifndef GFA_IDENTITIES_HPP_
#define GFA_IDENTITIES_HPP_

#include <cstdint>
#include <optional>

#include "automorphism.hpp"
#include "free_product.hpp"
#include "group.hpp"

namespace gfa {

struct IdentityOptions {
  int v_radius = 2;                        // V ball radius per coordinate
  std::optional<std::uint64_t> max_states;  // default: GFA_MAX_STATES or 1e7
  int threads = 1;
};

enum class Verdict {
  kIdentity,        // finite backend, exhaustive
  kNotIdentity,     // counterexample attached
  kUnknownAtBound,  // V backend, no counterexample inside the ball
};

struct MixedIdentityVerdict {
  FreeProductWord word{1};
  Verdict verdict = Verdict::kUnknownAtBound;
  std::optional<HomPoint> counterexample;
  std::uint64_t substitutions_checked = 0;

  bool is_identity() const { return verdict == Verdict::kIdentity; }
};

// Errors: kBoundExceeded if a finite scan would exceed the state cap.
MixedIdentityVerdict IsMixedIdentity(const FreeProductWord& w,
                                     const Group& group,
                                     const IdentityOptions& options = {});

struct KernelElement {
  GAutomorphism alpha = GAutomorphism::Identity(2);
  FreeProductWord law{1};  // x^L in rank 1, a verified mixed identity
  std::uint64_t exponent = 0;
  std::uint64_t points_checked = 0;
};

// alpha: x_1 -> x_1 x_2^L with L the exponent of G, as L copies of
// multx(1,2,+). Checked exhaustively against every point of G^n.
// Errors: kPrecondition for n < 2, kUnsupported for V, kBoundExceeded past
// the cap.
KernelElement MakeKernelElement(const Group& group, int rank,
                                const IdentityOptions& options = {});

// True iff act(phi, alpha) == phi for every phi in G^n (finite backends).
bool FixesAllPoints(const GAutomorphism& alpha, const Group& group,
                    const IdentityOptions& options = {},
                    std::uint64_t* points_checked = nullptr);

enum class FaithfulnessOutcome { kWitness, kInKernel, kBoundExceeded };

struct FaithfulnessResult {
  FaithfulnessOutcome outcome = FaithfulnessOutcome::kBoundExceeded;
  std::optional<HomPoint> point;  // act(point, alpha) != point
  int coordinate = -1;            // first i with point(x_i^-1 alpha(x_i)) != e
  std::uint64_t substitutions_checked = 0;
};

// Searches for a point moved by alpha through the words x_i^-1 alpha(x_i).
// Errors: kPrecondition if alpha is the identity.
FaithfulnessResult FaithfulnessWitness(const GAutomorphism& alpha,
                                       const Group& group,
                                       const IdentityOptions& options = {});

}  // namespace gfa

#endif  // GFA_IDENTITIES_HPP_
