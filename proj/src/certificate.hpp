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

// Text-in, JSON-out front end for every construction. Each call parses its
// inputs, builds the witness, re-checks the claim on a separate code path
// and returns a versioned record (docs/formats.md).

#ifndef GFA_CERTIFICATE_HPP_
#define GFA_CERTIFICATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "free_product.hpp"
#include "group.hpp"
#include "json.hpp"

namespace gfa {

inline constexpr int kSchemaVersion = 1;

enum class Outcome { kVerified, kFailed, kBoundExceeded };

struct Record {
  nlohmann::ordered_json json;
  Outcome outcome = Outcome::kVerified;
};

struct RunOptions {
  int threads = 1;
  std::optional<std::uint64_t> max_states;
  std::optional<int> v_radius;
};

// "[a; b][c; d]..." -> points.
std::vector<HomPoint> ParsePointTuple(std::string_view text, const Group& g);

Record Separate(const Group& g, const std::vector<std::string>& excluded,
                const std::string& target, const RunOptions& o = {});
Record Transitivity(const Group& g, const std::string& from,
                    const std::string& to);
Record KTransitivity(const Group& g, const std::string& src,
                     const std::string& dst, std::optional<int> k,
                     const RunOptions& o = {});
Record RewriteStab(const Group& g, int rank, const std::string& genword);
// rank <= 0 infers the rank from the largest generator mentioned.
Record MixedIdentity(const Group& g, int rank, const std::string& word,
                     const RunOptions& o = {});
Record Kernel(const Group& g, int rank, const RunOptions& o = {});
Record Faithful(const Group& g, int rank, const std::string& genword,
                const RunOptions& o = {});
Record Orbits(const Group& g, int rank, bool pairs, const RunOptions& o = {});
// op: "mul a b", "inv a", "apply a s", "reduce a", "ball r".
Record VCalc(const std::string& op, const std::vector<std::string>& args);

}  // namespace gfa

#endif  // GFA_CERTIFICATE_HPP_
