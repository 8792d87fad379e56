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

#include "limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace gfa {

std::uint64_t StateCap(std::optional<std::uint64_t> explicit_cap,
                       std::uint64_t fallback) {
  if (explicit_cap) return *explicit_cap;
  if (const char* env = std::getenv("GFA_MAX_STATES")) {
    std::uint64_t v = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end && v > 0) return v;
  }
  return fallback;
}

std::optional<std::uint64_t> CheckedPow(std::uint64_t base, int exp) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kLimit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace gfa
