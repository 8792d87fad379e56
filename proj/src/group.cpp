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

#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "error.hpp"

namespace gfa {

// ---------------------------------------------------------------------------
// GroupElement

bool GroupElement::IsIdentity() const {
  return std::visit([](const auto& p) { return p.IsIdentity(); }, payload_);
}

GroupElement GroupElement::Inverse() const {
  return std::visit([](const auto& p) { return GroupElement(p.Inverse()); },
                    payload_);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (const auto* pa = std::get_if<Permutation>(&a.payload_)) {
    const auto* pb = std::get_if<Permutation>(&b.payload_);
    if (pb == nullptr || pa->degree() != pb->degree()) {
      Fail(ErrorCode::kBackendMismatch,
           "cannot multiply " + a.ToString() + " by " + b.ToString());
    }
    return GroupElement(*pa * *pb);
  }
  const auto* va = std::get_if<PrefixExchangeMap>(&a.payload_);
  const auto* vb = std::get_if<PrefixExchangeMap>(&b.payload_);
  if (vb == nullptr) {
    Fail(ErrorCode::kBackendMismatch,
         "cannot multiply " + a.ToString() + " by " + b.ToString());
  }
  return GroupElement(*va * *vb);
}

std::string GroupElement::ToString() const {
  return std::visit([](const auto& p) { return p.ToString(); }, payload_);
}

std::size_t GroupElement::Hash() const {
  std::size_t h = payload_.index() * 0x9e3779b97f4a7c15ULL;
  if (const auto* p = std::get_if<Permutation>(&payload_)) {
    for (auto v : p->images()) h = (h ^ v) * 0x100000001b3ULL;
  } else {
    for (const auto& [u, v] : std::get<PrefixExchangeMap>(payload_).pairs()) {
      h = (h ^ std::hash<std::string>{}(u)) * 0x100000001b3ULL;
      h = (h ^ std::hash<std::string>{}(v)) * 0x100000001b3ULL;
    }
  }
  return h;
}

bool Group::IsTrivial() const {
  if (const auto* f = AsFinite()) return f->order() == 1;
  return false;
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(std::string name, int degree,
                                   std::vector<Permutation> generators,
                                   std::size_t cap)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      Fail(ErrorCode::kBackendMismatch, "generator " + g.ToString() +
                                            " has wrong degree for " + name_);
    }
  }
  std::vector<GroupElement> layer{GroupElement(Permutation::Identity(degree_))};
  index_.emplace(layer[0], 0);
  elements_.push_back(layer[0]);
  while (!layer.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : layer) {
      for (const auto& s : generators_) {
        GroupElement h = g * GroupElement(s);
        if (index_.contains(h)) continue;
        index_.emplace(h, -1);
        next.push_back(std::move(h));
        if (index_.size() > cap) {
          Fail(ErrorCode::kBoundExceeded,
               name_ + " has more than " + std::to_string(cap) + " elements");
        }
      }
    }
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      keyed.emplace_back(next[i].ToString(), i);
    }
    std::sort(keyed.begin(), keyed.end());
    layer.clear();
    for (const auto& [key, i] : keyed) {
      index_[next[i]] = static_cast<int>(elements_.size());
      elements_.push_back(next[i]);
      layer.push_back(next[i]);
    }
  }

  for (const auto& s : generators_) {
    generator_index_.push_back(index_.at(GroupElement(s)));
  }
  const int n = static_cast<int>(elements_.size());
  inverse_.resize(n);
  element_order_.resize(n);
  for (int i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].Inverse());
    const auto& p = std::get<Permutation>(elements_[i].payload());
    Permutation q = p;
    int k = 1;
    while (!q.IsIdentity()) {
      q = q * p;
      ++k;
    }
    element_order_[i] = k;
  }
}

GroupElement PermutationGroup::Parse(std::string_view text) const {
  GroupElement g(Permutation::Parse(text, degree_));
  if (!index_.contains(g)) {
    Fail(ErrorCode::kParse, g.ToString() + " is not an element of " + name_);
  }
  return g;
}

std::vector<GroupElement> PermutationGroup::SearchSpace(int) const {
  return elements_;
}

GroupElement PermutationGroup::Random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
  return elements_[pick(rng)];
}

int PermutationGroup::IndexOf(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

void PermutationGroup::BuildTable() const {
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table_[i * n + j] = index_.at(elements_[i] * elements_[j]);
    }
  }
}

int PermutationGroup::Mul(int i, int j) const {
  constexpr std::size_t kTableLimit = 4096;
  const std::size_t n = elements_.size();
  if (n > kTableLimit) return index_.at(elements_[i] * elements_[j]);
  std::call_once(table_once_, [this] { BuildTable(); });
  return static_cast<int>(table_[i * n + j]);
}

std::uint64_t PermutationGroup::Exponent() const {
  std::uint64_t l = 1;
  for (int o : element_order_) l = std::lcm(l, static_cast<std::uint64_t>(o));
  return l;
}

bool PermutationGroup::CheckSimplicity() const {
  std::call_once(simple_once_, [this] {
    const int n = static_cast<int>(elements_.size());
    if (n == 1) {
      simple_ = false;
      return;
    }
    std::vector<bool> classified(n, false);
    classified[0] = true;
    for (int rep = 1; rep < n; ++rep) {
      if (classified[rep]) continue;
      // Conjugacy class of rep.
      std::vector<int> cls;
      std::vector<bool> in_class(n, false);
      for (int h = 0; h < n; ++h) {
        int c = Mul(Mul(Inv(h), rep), h);
        if (!in_class[c]) {
          in_class[c] = true;
          cls.push_back(c);
        }
      }
      for (int c : cls) classified[c] = true;
      // The subgroup generated by a conjugacy class is its normal closure.
      std::vector<bool> reached(n, false);
      std::vector<int> frontier{0};
      reached[0] = true;
      int count = 1;
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
          for (int c : cls) {
            int y = Mul(x, c);
            if (!reached[y]) {
              reached[y] = true;
              ++count;
              next.push_back(y);
            }
          }
        }
        frontier.swap(next);
      }
      if (count != n) {
        simple_ = false;
        return;
      }
    }
    simple_ = true;
  });
  return simple_;
}

bool PermutationGroup::CenterIsTrivial() const {
  const int n = static_cast<int>(elements_.size());
  for (int i = 1; i < n; ++i) {
    bool central = true;
    for (int s : generator_index_) {
      if (Mul(i, s) != Mul(s, i)) {
        central = false;
        break;
      }
    }
    if (central) return false;
  }
  return true;
}

bool PermutationGroup::IsSimple() const { return CheckSimplicity(); }
bool PermutationGroup::HasTrivialCenter() const { return CenterIsTrivial(); }

// ---------------------------------------------------------------------------
// ThompsonV

const std::vector<PrefixExchangeMap>& ThompsonV::StandardGenerators() {
  static const std::vector<PrefixExchangeMap> gens = {
      PrefixExchangeMap::Parse("V{0,10,11 -> 00,01,1}"),
      PrefixExchangeMap::Parse("V{0,10,110,111 -> 0,100,101,11}"),
      PrefixExchangeMap::Parse("V{0,10,11 -> 11,0,10}"),
      PrefixExchangeMap::Parse("V{0,10,11 -> 0,11,10}"),
  };
  return gens;
}

GroupElement ThompsonV::Parse(std::string_view text) const {
  return GroupElement(PrefixExchangeMap::Parse(text));
}

GroupElement ThompsonV::Random(std::mt19937_64& rng) const {
  const auto& gens = StandardGenerators();
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> pick(0, 2 * gens.size() - 1);
  PrefixExchangeMap m;
  for (int k = len(rng); k > 0; --k) {
    int g = pick(rng);
    m = m * (g < static_cast<int>(gens.size()) ? gens[g]
                                              : gens[g - gens.size()].Inverse());
  }
  return GroupElement(std::move(m));
}

std::vector<GroupElement> ThompsonV::EnumerateBall(int radius) const {
  if (radius < 0 || radius > max_radius_) {
    Fail(ErrorCode::kBoundExceeded,
         "ball radius " + std::to_string(radius) + " exceeds cap " +
             std::to_string(max_radius_));
  }
  std::vector<PrefixExchangeMap> letters = StandardGenerators();
  for (const auto& g : StandardGenerators()) letters.push_back(g.Inverse());

  std::vector<GroupElement> ball{identity()};
  std::unordered_set<GroupElement, GroupElementHash> seen{ball[0]};
  std::vector<PrefixExchangeMap> frontier{PrefixExchangeMap()};
  for (int r = 0; r < radius; ++r) {
    std::vector<PrefixExchangeMap> next;
    for (const auto& w : frontier) {
      for (const auto& s : letters) {
        PrefixExchangeMap m = w * s;
        if (seen.emplace(m).second) {
          ball.emplace_back(m);
          next.push_back(std::move(m));
        }
      }
    }
    frontier.swap(next);
  }
  return ball;
}

// ---------------------------------------------------------------------------

namespace {

int ParseSize(std::string_view digits, std::string_view spec) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 4) {
    Fail(ErrorCode::kParse, "unknown group \"" + std::string(spec) + "\"");
  }
  return std::stoi(std::string(digits));
}

Permutation Cycle(int degree, int first, int last) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (int i = first; i < last; ++i) images[i] = i + 1;
  images[last] = first;
  return Permutation(std::move(images));
}

}  // namespace

GroupPtr MakeGroup(std::string_view spec) {
  if (spec == "V") return std::make_shared<ThompsonV>();
  if (spec == "trivial") {
    return std::make_shared<PermutationGroup>("trivial", 1,
                                              std::vector<Permutation>{});
  }
  if (spec.starts_with("gens:")) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec.substr(5)) {
      if (c == ';') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    int degree = 1;
    for (const auto& p : parts) degree = std::max(degree, Permutation::InferDegree(p));
    std::vector<Permutation> gens;
    for (const auto& p : parts) gens.push_back(Permutation::Parse(p, degree));
    return std::make_shared<PermutationGroup>(std::string(spec), degree,
                                              std::move(gens));
  }
  if (spec.empty()) Fail(ErrorCode::kParse, "empty group name");
  const char family = spec[0];
  const int n = ParseSize(spec.substr(1), spec);
  if (n < 1 || n > 12) {
    Fail(ErrorCode::kParse, "group size out of range in \"" + std::string(spec) + "\"");
  }
  std::vector<Permutation> gens;
  switch (family) {
    case 'A':
      if (n >= 3) gens.push_back(Cycle(n, 0, 2));
      if (n >= 4) gens.push_back(n % 2 == 1 ? Cycle(n, 0, n - 1) : Cycle(n, 1, n - 1));
      break;
    case 'S':
      if (n >= 2) gens.push_back(Cycle(n, 0, 1));
      if (n >= 3) gens.push_back(Cycle(n, 0, n - 1));
      break;
    case 'C':
      if (n >= 2) gens.push_back(Cycle(n, 0, n - 1));
      break;
    default:
      Fail(ErrorCode::kParse, "unknown group \"" + std::string(spec) + "\"");
  }
  return std::make_shared<PermutationGroup>(std::string(spec), n, std::move(gens));
}

void RequireAdmissible(const Group& g) {
  if (g.IsTrivial()) {
    Fail(ErrorCode::kPrecondition, "group " + g.name() + " is trivial");
  }
  if (!g.IsSimple()) {
    Fail(ErrorCode::kPrecondition, "group " + g.name() + " is not simple");
  }
  if (!g.HasTrivialCenter()) {
    Fail(ErrorCode::kPrecondition,
         "group " + g.name() + " does not have trivial center");
  }
}

}  // namespace gfa
