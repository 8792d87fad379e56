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

#include "identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "error.hpp"
#include "limits.hpp"

namespace gfa {
namespace {

struct Domain {
  std::vector<GroupElement> space;
  int rank = 1;
  std::uint64_t total = 0;      // points scanned
  bool truncated = false;       // total < |space|^rank
};

// Finite groups: all of G^n, or kBoundExceeded. V: the ball to the power n,
// cut at the cap.
Domain MakeDomain(const Group& group, int rank, const IdentityOptions& o) {
  if (rank < 1) Fail(ErrorCode::kPrecondition, "rank must be positive");
  Domain d;
  d.space = group.SearchSpace(o.v_radius);
  d.rank = rank;
  const std::uint64_t cap = StateCap(o.max_states, kDefaultPointCap);
  auto size = CheckedPow(d.space.size(), rank);
  if (size && *size <= cap) {
    d.total = *size;
    return d;
  }
  if (group.IsFinite()) {
    Fail(ErrorCode::kBoundExceeded,
         "|G|^n = " + std::to_string(d.space.size()) + "^" +
             std::to_string(rank) + " exceeds the state cap " +
             std::to_string(cap));
  }
  d.total = cap;
  d.truncated = true;
  return d;
}

HomPoint PointAt(const Domain& d, std::uint64_t index) {
  HomPoint p;
  p.images.resize(d.rank, d.space[0]);
  const std::uint64_t base = d.space.size();
  for (int k = d.rank - 1; k >= 0; --k) {
    p.images[k] = d.space[index % base];
    index /= base;
  }
  return p;
}

// Smallest index in [0, d.total) satisfying `hit`, scanning in parallel
// chunks. Returns d.total if none.
std::uint64_t FirstHit(const Domain& d, int threads,
                       const std::function<bool(const HomPoint&)>& hit) {
  const std::uint64_t total = d.total;
  std::atomic<std::uint64_t> best{total};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (hit(PointAt(d, i))) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  const int workers =
      static_cast<int>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1)));
  if (workers == 1) {
    scan(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min(total, chunk * w);
      std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back(scan, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return best.load();
}

}  // namespace

MixedIdentityVerdict IsMixedIdentity(const FreeProductWord& w,
                                     const Group& group,
                                     const IdentityOptions& options) {
  Domain d = MakeDomain(group, w.rank(), options);
  MixedIdentityVerdict v;
  v.word = w;
  std::uint64_t i = FirstHit(d, options.threads, [&](const HomPoint& p) {
    return !Evaluate(w, p, group).IsIdentity();
  });
  if (i < d.total) {
    v.verdict = Verdict::kNotIdentity;
    v.counterexample = PointAt(d, i);
    v.substitutions_checked = i + 1;
  } else {
    v.verdict = group.IsFinite() ? Verdict::kIdentity : Verdict::kUnknownAtBound;
    v.substitutions_checked = d.total;
  }
  return v;
}

bool FixesAllPoints(const GAutomorphism& alpha, const Group& group,
                    const IdentityOptions& options,
                    std::uint64_t* points_checked) {
  if (!group.IsFinite()) {
    Fail(ErrorCode::kUnsupported, "exhaustive point scan needs a finite group");
  }
  Domain d = MakeDomain(group, alpha.rank(), options);
  std::uint64_t i = FirstHit(d, options.threads, [&](const HomPoint& p) {
    return Act(p, alpha, group) != p;
  });
  if (points_checked) *points_checked = std::min(i + 1, d.total);
  return i == d.total;
}

KernelElement MakeKernelElement(const Group& group, int rank,
                                const IdentityOptions& options) {
  if (rank < 2) {
    Fail(ErrorCode::kPrecondition,
         "kernel elements need rank >= 2; the action is faithful for n = 1");
  }
  const PermutationGroup* fg = group.AsFinite();
  if (fg == nullptr) {
    Fail(ErrorCode::kUnsupported, "kernel elements need a finite backend");
  }
  if (group.IsTrivial()) {
    Fail(ErrorCode::kPrecondition, "the trivial group has no non-trivial kernel word");
  }
  KernelElement k;
  k.exponent = fg->Exponent();
  k.law = FreeProductWord::Generator(1, 0, Exponent(k.exponent));
  if (!IsMixedIdentity(k.law, group, options).is_identity()) {
    Fail(ErrorCode::kPrecondition, "x^" + std::to_string(k.exponent) +
                                       " is not a law in " + group.name());
  }
  GenWord word(k.exponent, MultXGen{0, 1, 1, std::nullopt});
  k.alpha = GAutomorphism::FromGenWord(rank, std::move(word));
  if (!FixesAllPoints(k.alpha, group, options, &k.points_checked)) {
    Fail(ErrorCode::kPrecondition, "kernel candidate moves a point");
  }
  return k;
}

FaithfulnessResult FaithfulnessWitness(const GAutomorphism& alpha,
                                       const Group& group,
                                       const IdentityOptions& options) {
  const int n = alpha.rank();
  std::vector<std::pair<int, FreeProductWord>> diffs;
  for (int i = 0; i < n; ++i) {
    WordBuilder b(n);
    b.Append(Power{i, -1});
    b.Append(alpha.image(i));
    FreeProductWord d = std::move(b).Build();
    if (!d.IsEmpty()) diffs.emplace_back(i, std::move(d));
  }
  if (diffs.empty()) {
    Fail(ErrorCode::kPrecondition, "the identity automorphism moves no point");
  }
  Domain d = MakeDomain(group, n, options);
  std::uint64_t i = FirstHit(d, options.threads, [&](const HomPoint& p) {
    for (const auto& [k, w] : diffs) {
      if (!Evaluate(w, p, group).IsIdentity()) return true;
    }
    return false;
  });
  FaithfulnessResult r;
  if (i == d.total) {
    r.substitutions_checked = d.total;
    r.outcome = d.truncated || !group.IsFinite()
                    ? FaithfulnessOutcome::kBoundExceeded
                    : FaithfulnessOutcome::kInKernel;
    return r;
  }
  r.outcome = FaithfulnessOutcome::kWitness;
  r.point = PointAt(d, i);
  r.substitutions_checked = i + 1;
  for (const auto& [k, w] : diffs) {
    if (!Evaluate(w, *r.point, group).IsIdentity()) {
      r.coordinate = k;
      break;
    }
  }
  return r;
}

}  // namespace gfa
