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

#include "prefix_map.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "error.hpp"

namespace gfa {
namespace {

bool IsBinary(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

// Checks completeness of a sorted antichain-candidate list restricted to the
// strings in [first, last), all of which start with `prefix`.
bool CompleteUnder(const std::vector<std::string>& code, std::size_t first,
                   std::size_t last, const std::string& prefix) {
  if (first == last) return false;
  if (code[first].size() == prefix.size()) {
    // The prefix itself is a code word; nothing else may extend it.
    return last - first == 1;
  }
  std::string zero = prefix + '0';
  std::size_t mid = first;
  while (mid < last && code[mid].compare(0, zero.size(), zero) == 0) ++mid;
  return CompleteUnder(code, first, mid, zero) &&
         CompleteUnder(code, mid, last, prefix + '1');
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  bool any = false;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
      any = true;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
      any = true;
    }
  }
  if (any || !out.empty()) out.push_back(cur);
  if (out.empty()) out.emplace_back();  // "V{ -> }" is the identity
  return out;
}

}  // namespace

PrefixExchangeMap::PrefixExchangeMap() : pairs_{{"", ""}} {}

PrefixExchangeMap::PrefixExchangeMap(Trusted, std::vector<Pair> pairs)
    : pairs_(Reduce(std::move(pairs))) {}

PrefixExchangeMap::PrefixExchangeMap(std::vector<std::string> domain,
                                     std::vector<std::string> range) {
  if (domain.size() != range.size()) {
    Fail(ErrorCode::kParse, "prefix codes have different sizes (" +
                                std::to_string(domain.size()) + " vs " +
                                std::to_string(range.size()) + ")");
  }
  for (const auto* side : {&domain, &range}) {
    for (const auto& w : *side) {
      if (!IsBinary(w)) {
        Fail(ErrorCode::kParse, "prefix \"" + w + "\" is not a binary string");
      }
    }
    if (!IsCompletePrefixCode(*side)) {
      std::string joined;
      for (const auto& w : *side) joined += (joined.empty() ? "" : ",") + w;
      Fail(ErrorCode::kParse,
           "{" + joined + "} is not a complete prefix code (must be an "
                          "antichain covering every binary sequence)");
    }
  }
  std::vector<Pair> pairs;
  pairs.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    pairs.emplace_back(std::move(domain[i]), std::move(range[i]));
  }
  pairs_ = Reduce(std::move(pairs));
}

bool PrefixExchangeMap::IsCompletePrefixCode(std::vector<std::string> code) {
  std::sort(code.begin(), code.end());
  if (std::adjacent_find(code.begin(), code.end()) != code.end()) return false;
  return CompleteUnder(code, 0, code.size(), "");
}

PrefixExchangeMap PrefixExchangeMap::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s == "e") return PrefixExchangeMap();
  if (s.size() < 3 || s.substr(0, 2) != "V{" || s.back() != '}') {
    Fail(ErrorCode::kParse,
         "expected V{u1,...,uk -> v1,...,vk}, got \"" + std::string(text) +
             "\"");
  }
  s = s.substr(2, s.size() - 3);
  std::size_t arrow = s.find("->");
  if (arrow == std::string_view::npos) {
    Fail(ErrorCode::kParse, "missing '->' in \"" + std::string(text) + "\"");
  }
  return PrefixExchangeMap(SplitList(s.substr(0, arrow)),
                           SplitList(s.substr(arrow + 2)));
}

std::vector<PrefixExchangeMap::Pair> PrefixExchangeMap::Reduce(
    std::vector<Pair> pairs) {
  bool changed = true;
  while (changed && pairs.size() > 1) {
    changed = false;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i].first] = i;
    std::vector<bool> dead(pairs.size(), false);
    std::vector<Pair> merged;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [u, v] = pairs[i];
      if (dead[i] || u.empty() || u.back() != '0') continue;
      if (v.empty() || v.back() != '0') continue;
      std::string sibling = u;
      sibling.back() = '1';
      auto it = index.find(sibling);
      if (it == index.end() || dead[it->second]) continue;
      const std::string& w = pairs[it->second].second;
      if (w.size() != v.size() || w.back() != '1' ||
          w.compare(0, w.size() - 1, v, 0, v.size() - 1) != 0) {
        continue;
      }
      dead[i] = dead[it->second] = true;
      merged.emplace_back(u.substr(0, u.size() - 1), v.substr(0, v.size() - 1));
      changed = true;
    }
    if (changed) {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!dead[i]) merged.push_back(std::move(pairs[i]));
      }
      pairs = std::move(merged);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool PrefixExchangeMap::IsIdentity() const {
  return pairs_.size() == 1 && pairs_[0].first.empty() &&
         pairs_[0].second.empty();
}

PrefixExchangeMap PrefixExchangeMap::Inverse() const {
  std::vector<Pair> swapped;
  swapped.reserve(pairs_.size());
  for (const auto& [u, v] : pairs_) swapped.emplace_back(v, u);
  std::sort(swapped.begin(), swapped.end());
  return PrefixExchangeMap(Trusted{}, std::move(swapped));
}

PrefixExchangeMap operator*(const PrefixExchangeMap& a,
                            const PrefixExchangeMap& b) {
  std::map<std::string, std::string, std::less<>> b_map(b.pairs_.begin(),
                                                        b.pairs_.end());
  std::vector<PrefixExchangeMap::Pair> out;
  for (const auto& [d, r] : a.pairs_) {
    // Either some b-domain word is a prefix of r ...
    bool found = false;
    for (std::size_t len = 0; len <= r.size(); ++len) {
      auto it = b_map.find(std::string_view(r).substr(0, len));
      if (it != b_map.end()) {
        out.emplace_back(d, it->second + r.substr(len));
        found = true;
        break;
      }
    }
    if (found) continue;
    // ... or r is a proper prefix of a complete sub-code of b's domain.
    for (auto it = b_map.lower_bound(r);
         it != b_map.end() && it->first.compare(0, r.size(), r) == 0; ++it) {
      out.emplace_back(d + it->first.substr(r.size()), it->second);
    }
  }
  return PrefixExchangeMap(PrefixExchangeMap::Trusted{}, std::move(out));
}

std::optional<std::string> PrefixExchangeMap::Apply(std::string_view s) const {
  // pairs_ is sorted by domain, so the leaf containing s (if any) is the
  // last domain word <= s.
  auto it = std::upper_bound(
      pairs_.begin(), pairs_.end(), s,
      [](std::string_view x, const Pair& p) { return x < p.first; });
  if (it == pairs_.begin()) return std::nullopt;
  --it;
  const std::string& d = it->first;
  if (d.size() > s.size() || s.compare(0, d.size(), d) != 0) {
    return std::nullopt;
  }
  return it->second + std::string(s.substr(d.size()));
}

std::string PrefixExchangeMap::ToString() const {
  if (IsIdentity()) return "e";
  std::string dom, ran;
  for (const auto& [u, v] : pairs_) {
    if (!dom.empty()) {
      dom += ',';
      ran += ',';
    }
    dom += u;
    ran += v;
  }
  return "V{" + dom + " -> " + ran + "}";
}

}  // namespace gfa
