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

#ifndef GFA_LIMITS_HPP_
#define GFA_LIMITS_HPP_

#include <cstdint>
#include <optional>

namespace gfa {

inline constexpr std::uint64_t kDefaultPointCap = 10'000'000;
inline constexpr std::uint64_t kDefaultPairCap = 20'000'000;

// The explicit cap if given, else GFA_MAX_STATES if set to a positive
// integer, else `fallback`.
std::uint64_t StateCap(std::optional<std::uint64_t> explicit_cap,
                       std::uint64_t fallback);

// base^exp, or nullopt past 2^63.
std::optional<std::uint64_t> CheckedPow(std::uint64_t base, int exp);

}  // namespace gfa

#endif  // GFA_LIMITS_HPP_
