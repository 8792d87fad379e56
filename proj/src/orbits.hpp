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

// Orbit census of the generator action on G^n and on ordered pairs
// (G^n) x (G^n) for a finite group G.
//
// A point (g_1, ..., g_n) has state index sum idx(g_k) |G|^(n-1-k), with idx
// the canonical enumeration index. A pair (p, q) has index
// idx(p) |G|^n + idx(q). Orbits are discovered in increasing order of their
// smallest state, which is the orbit representative.

#ifndef GFA_ORBITS_HPP_
#define GFA_ORBITS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "group.hpp"

namespace gfa {

struct OrbitOptions {
  int threads = 1;
  std::optional<std::uint64_t> max_states;  // default: GFA_MAX_STATES or 1e7/2e7
  bool keep_labels = false;                 // fill OrbitReport::labels
  std::vector<XGen> extra_generators;       // appended to the default set
};

struct OrbitReport {
  std::string group;
  int rank = 0;
  bool pairs = false;
  std::uint64_t state_space_size = 0;
  std::uint64_t num_orbits = 0;
  std::vector<std::uint64_t> sizes;            // descending
  std::vector<std::uint64_t> representatives;  // by discovery, ascending
  std::vector<std::uint64_t> orbit_sizes_by_rep;
  std::vector<std::string> generators;
  double seconds = 0;
  // FNV-1a over (representative, size) in discovery order.
  std::uint64_t checksum = 0;
  // Orbit ordinal of every state, when requested.
  std::vector<std::uint32_t> labels;
};

// The default generators: sigma = (1 2) and the n-cycle, inv(1), multx(1,2,+)
// and multx(1,2,-), conj(1){g} and multg(1){g} for the generators g of G.
// Duplicates are dropped.
std::vector<XGen> DefaultOrbitGenerators(const PermutationGroup& group,
                                         int rank);

// Errors: kPrecondition for rank < 1, kBoundExceeded past the cap,
// kBackendMismatch for extra generators with foreign elements.
OrbitReport OrbitsOnPoints(const PermutationGroup& group, int rank,
                           const OrbitOptions& options = {});
OrbitReport OrbitsOnPairs(const PermutationGroup& group, int rank,
                          const OrbitOptions& options = {});

// Point <-> index helpers matching the encoding above.
std::uint64_t PointIndex(const PermutationGroup& group, const HomPoint& p);
HomPoint PointFromIndex(const PermutationGroup& group, int rank,
                        std::uint64_t index);

}  // namespace gfa

#endif  // GFA_ORBITS_HPP_
