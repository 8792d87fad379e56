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

#include "orbits.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <thread>

#include "error.hpp"
#include "limits.hpp"

namespace gfa {
namespace {

constexpr std::size_t kTableLimit = 4096;

class IndexArith {
 public:
  explicit IndexArith(const PermutationGroup& g) : g_(g), n_(g.order()) {
    if (n_ <= kTableLimit) {
      table_.resize(n_ * n_);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          table_[a * n_ + b] = g.Mul(static_cast<int>(a), static_cast<int>(b));
    }
  }
  int Mul(int a, int b) const {
    return table_.empty() ? g_.Mul(a, b) : table_[a * n_ + b];
  }
  int Inv(int a) const { return g_.Inv(a); }

 private:
  const PermutationGroup& g_;
  std::size_t n_;
  std::vector<int> table_;
};

// An XGen with its elements replaced by indices.
struct Compiled {
  enum Kind { kPerm, kInv, kConj, kMultX, kMultG } kind;
  int i = 0, j = 0, sign = 1;
  std::vector<int> perm;
  int g = 0, g_inv = 0;  // conj / multg element; multx conjugator h
};

int ElementIndex(const PermutationGroup& group, const GroupElement& g) {
  int k = group.IndexOf(g);
  if (k < 0) {
    Fail(ErrorCode::kBackendMismatch,
         g.ToString() + " is not an element of " + group.name());
  }
  return k;
}

Compiled Compile(const XGen& s, const PermutationGroup& group, int rank) {
  Validate(s, rank);
  Compiled c{};
  if (const auto* p = std::get_if<PermuteBasis>(&s)) {
    c.kind = Compiled::kPerm;
    c.perm = p->images;
  } else if (const auto* v = std::get_if<InvertGen>(&s)) {
    c.kind = Compiled::kInv;
    c.i = v->i;
  } else if (const auto* v = std::get_if<ConjGen>(&s)) {
    c.kind = Compiled::kConj;
    c.i = v->i;
    c.g = ElementIndex(group, v->g);
  } else if (const auto* v = std::get_if<MultXGen>(&s)) {
    c.kind = Compiled::kMultX;
    c.i = v->i;
    c.j = v->j;
    c.sign = v->sign;
    c.g = v->h ? ElementIndex(group, *v->h) : 0;
  } else {
    const auto& m = std::get<MultGGen>(s);
    c.kind = Compiled::kMultG;
    c.i = m.i;
    c.g = ElementIndex(group, m.g);
  }
  c.g_inv = group.Inv(c.g);
  return c;
}

// phi o s on one point stored in coords[0..n), written to out.
void Apply(const Compiled& c, const IndexArith& a, const int* in, int* out,
           int n) {
  if (c.kind == Compiled::kPerm) {
    for (int k = 0; k < n; ++k) out[k] = in[c.perm[k]];
    return;
  }
  std::copy(in, in + n, out);
  const int x = in[c.i];
  switch (c.kind) {
    case Compiled::kInv:
      out[c.i] = a.Inv(x);
      break;
    case Compiled::kConj:
      out[c.i] = a.Mul(a.Mul(c.g_inv, x), c.g);
      break;
    case Compiled::kMultX: {
      int y = c.sign > 0 ? in[c.j] : a.Inv(in[c.j]);
      out[c.i] = a.Mul(x, a.Mul(a.Mul(c.g_inv, y), c.g));
      break;
    }
    case Compiled::kMultG:
      out[c.i] = a.Mul(x, c.g);
      break;
    case Compiled::kPerm:
      break;
  }
}

class Bitset {
 public:
  explicit Bitset(std::uint64_t n) : words_((n + 63) / 64) {
    for (auto& w : words_) w.store(0, std::memory_order_relaxed);
  }
  // True if this call set the bit.
  bool Claim(std::uint64_t i) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    return (words_[i >> 6].fetch_or(mask, std::memory_order_relaxed) & mask) == 0;
  }
  // First clear bit at or after i, or n.
  std::uint64_t NextClear(std::uint64_t i, std::uint64_t n) const {
    while (i < n) {
      std::uint64_t w = ~words_[i >> 6].load(std::memory_order_relaxed) >> (i & 63);
      if (w != 0) return std::min(n, i + __builtin_ctzll(w));
      i = (i | 63) + 1;
    }
    return n;
  }

 private:
  std::vector<std::atomic<std::uint64_t>> words_;
};

struct Engine {
  const PermutationGroup& group;
  int rank;
  bool pairs;
  std::vector<Compiled> gens;
  IndexArith arith;
  std::uint64_t order;
  std::uint64_t total = 0;

  int Width() const { return pairs ? 2 * rank : rank; }

  void Decode(std::uint64_t s, int* c) const {
    for (int k = Width() - 1; k >= 0; --k) {
      c[k] = static_cast<int>(s % order);
      s /= order;
    }
  }
  std::uint64_t Encode(const int* c) const {
    std::uint64_t s = 0;
    for (int k = 0; k < Width(); ++k) s = s * order + c[k];
    return s;
  }
  // Neighbours of s, one per generator.
  template <typename F>
  void Expand(std::uint64_t s, std::vector<int>& in, std::vector<int>& out,
              F&& visit) const {
    Decode(s, in.data());
    for (const auto& g : gens) {
      Apply(g, arith, in.data(), out.data(), rank);
      if (pairs) Apply(g, arith, in.data() + rank, out.data() + rank, rank);
      visit(Encode(out.data()));
    }
  }
};

OrbitReport Run(const PermutationGroup& group, int rank, bool pairs,
                const OrbitOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (rank < 1) Fail(ErrorCode::kPrecondition, "rank must be at least 1");
  const std::uint64_t cap =
      StateCap(options.max_states, pairs ? kDefaultPairCap : kDefaultPointCap);
  auto total = CheckedPow(group.order(), pairs ? 2 * rank : rank);
  if (!total || *total > cap) {
    Fail(ErrorCode::kBoundExceeded,
         std::string(pairs ? "pair" : "point") + " state space " +
             (total ? std::to_string(*total) : std::string("> 2^63")) +
             " exceeds the cap " + std::to_string(cap));
  }

  std::vector<XGen> xgens = DefaultOrbitGenerators(group, rank);
  for (const auto& s : options.extra_generators) xgens.push_back(s);
  Engine e{group, rank, pairs, {}, IndexArith(group), group.order(), *total};
  OrbitReport r;
  r.group = group.name();
  r.rank = rank;
  r.pairs = pairs;
  r.state_space_size = *total;
  for (const auto& s : xgens) {
    e.gens.push_back(Compile(s, group, rank));
    r.generators.push_back(ToString(s));
  }

  Bitset seen(*total);
  if (options.keep_labels) r.labels.assign(*total, 0);
  const int threads = std::max(1, options.threads);
  const int width = e.Width();
  constexpr std::size_t kParallelFrontier = 4096;

  std::uint64_t s = 0;
  while ((s = seen.NextClear(s, *total)) < *total) {
    const auto ordinal = static_cast<std::uint32_t>(r.representatives.size());
    seen.Claim(s);
    if (options.keep_labels) r.labels[s] = ordinal;
    std::uint64_t size = 1;
    std::vector<std::uint64_t> frontier{s}, next;
    while (!frontier.empty()) {
      next.clear();
      auto expand_range = [&](std::size_t lo, std::size_t hi,
                              std::vector<std::uint64_t>& sink) {
        std::vector<int> in(width), out(width);
        for (std::size_t k = lo; k < hi; ++k) {
          e.Expand(frontier[k], in, out, [&](std::uint64_t t) {
            if (seen.Claim(t)) {
              if (options.keep_labels) r.labels[t] = ordinal;
              sink.push_back(t);
            }
          });
        }
      };
      if (threads == 1 || frontier.size() < kParallelFrontier) {
        expand_range(0, frontier.size(), next);
      } else {
        std::vector<std::vector<std::uint64_t>> sinks(threads);
        std::vector<std::thread> pool;
        const std::size_t chunk = (frontier.size() + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
          std::size_t lo = std::min(frontier.size(), chunk * w);
          std::size_t hi = std::min(frontier.size(), lo + chunk);
          pool.emplace_back([&, lo, hi, w] { expand_range(lo, hi, sinks[w]); });
        }
        for (auto& t : pool) t.join();
        for (auto& sk : sinks) next.insert(next.end(), sk.begin(), sk.end());
      }
      size += next.size();
      frontier.swap(next);
    }
    r.representatives.push_back(s);
    r.orbit_sizes_by_rep.push_back(size);
  }

  r.num_orbits = r.representatives.size();
  r.sizes = r.orbit_sizes_by_rep;
  std::sort(r.sizes.begin(), r.sizes.end(), std::greater<>());
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (std::size_t k = 0; k < r.representatives.size(); ++k) {
    mix(r.representatives[k]);
    mix(r.orbit_sizes_by_rep[k]);
  }
  r.checksum = h;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

}  // namespace

std::vector<XGen> DefaultOrbitGenerators(const PermutationGroup& group,
                                         int rank) {
  std::vector<XGen> out;
  auto add = [&out](XGen s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  if (rank >= 2) {
    std::vector<int> swap(rank), cycle(rank);
    for (int k = 0; k < rank; ++k) {
      swap[k] = k;
      cycle[k] = (k + 1) % rank;
    }
    std::swap(swap[0], swap[1]);
    add(PermuteBasis{swap});
    add(PermuteBasis{cycle});
  }
  add(InvertGen{0});
  if (rank >= 2) {
    add(MultXGen{0, 1, 1, std::nullopt});
    add(MultXGen{0, 1, -1, std::nullopt});
  }
  for (const auto& p : group.generators()) {
    GroupElement g(p);
    if (g.IsIdentity()) continue;
    add(ConjGen{0, g});
    add(MultGGen{0, g});
  }
  return out;
}

OrbitReport OrbitsOnPoints(const PermutationGroup& group, int rank,
                           const OrbitOptions& options) {
  return Run(group, rank, false, options);
}

OrbitReport OrbitsOnPairs(const PermutationGroup& group, int rank,
                          const OrbitOptions& options) {
  return Run(group, rank, true, options);
}

std::uint64_t PointIndex(const PermutationGroup& group, const HomPoint& p) {
  std::uint64_t s = 0;
  for (const auto& g : p.images) s = s * group.order() + ElementIndex(group, g);
  return s;
}

HomPoint PointFromIndex(const PermutationGroup& group, int rank,
                        std::uint64_t index) {
  HomPoint p;
  p.images.resize(rank, group.identity());
  for (int k = rank - 1; k >= 0; --k) {
    p.images[k] = group.At(static_cast<int>(index % group.order()));
    index /= group.order();
  }
  return p;
}

}  // namespace gfa
