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

#include "permutation.hpp"

#include <cctype>
#include <numeric>

#include "error.hpp"

namespace gfa {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Splits cycle notation into its cycles; each cycle is a list of points.
std::vector<std::vector<int>> ParseCycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::string_view s = Trim(text);
  if (s == "e" || s == "()") return cycles;
  if (s.empty()) Fail(ErrorCode::kParse, "empty permutation");
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (IsSpace(s[pos])) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') {
      Fail(ErrorCode::kParse, "expected '(' in permutation \"" +
                                  std::string(text) + "\"");
    }
    ++pos;
    std::vector<int> cycle;
    bool closed = false;
    while (pos < s.size()) {
      char c = s[pos];
      if (IsSpace(c) || c == ',') {
        ++pos;
      } else if (c == ')') {
        ++pos;
        closed = true;
        break;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        int v = 0;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]))) {
          v = v * 10 + (s[pos] - '0');
          if (v > 65535) Fail(ErrorCode::kParse, "point out of range");
          ++pos;
        }
        cycle.push_back(v);
      } else {
        Fail(ErrorCode::kParse, std::string("unexpected character '") + c +
                                    "' in permutation \"" + std::string(text) +
                                    "\"");
      }
    }
    if (!closed) {
      Fail(ErrorCode::kParse,
           "unterminated cycle in permutation \"" + std::string(text) + "\"");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Permutation::Permutation(std::vector<std::uint16_t> images)
    : images_(std::move(images)) {}

Permutation Permutation::Identity(int degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

int Permutation::InferDegree(std::string_view text) {
  int degree = 1;
  for (const auto& cycle : ParseCycles(text)) {
    for (int p : cycle) degree = std::max(degree, p + 1);
  }
  return degree;
}

Permutation Permutation::Parse(std::string_view text, int degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : ParseCycles(text)) {
    for (int p : cycle) {
      if (p >= degree) {
        Fail(ErrorCode::kParse, "point " + std::to_string(p) +
                                    " outside degree " +
                                    std::to_string(degree));
      }
      if (seen[p]) {
        Fail(ErrorCode::kParse, "point " + std::to_string(p) +
                                    " repeated in \"" + std::string(text) +
                                    "\"");
      }
      seen[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint16_t> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Permutation(std::move(out));
}

std::string Permutation::ToString() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace gfa
