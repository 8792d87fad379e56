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

#include "witnesses.hpp"

#include <algorithm>
#include <deque>

#include "error.hpp"

namespace gfa {
namespace {

std::optional<GroupElement> NonTrivial(GroupElement g) {
  if (g.IsIdentity()) return std::nullopt;
  return g;
}

bool Contains(const std::vector<GroupElement>& v, const GroupElement& g) {
  return std::find(v.begin(), v.end(), g) != v.end();
}

// Copies a rank-1 word into rank `rank`, renaming x to x_{generator}.
FreeProductWord Relabel(const FreeProductWord& w, int rank, int generator) {
  WordBuilder b(rank);
  for (const auto& l : w.letters()) {
    if (const auto* p = std::get_if<Power>(&l)) {
      b.Append(Power{generator, p->exponent});
    } else {
      b.Append(l);
    }
  }
  return std::move(b).Build();
}

const PermutationGroup& RequireFinite(const Group& group, const char* what) {
  const PermutationGroup* f = group.AsFinite();
  if (f == nullptr) {
    Fail(ErrorCode::kUnsupported,
         std::string(what) + " is only effective for finite backends, not " +
             group.name());
  }
  return *f;
}

void Emit(GenWord& out, HomPoint& p, const GenWord& gens) {
  for (const auto& s : gens) {
    p = Act(p, s);
    out.push_back(s);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

GAutomorphism TransitivityWitness(const HomPoint& phi, const HomPoint& psi) {
  if (phi.rank() != psi.rank()) {
    Fail(ErrorCode::kRankMismatch, "transitivity witness between points of rank " +
                                       std::to_string(phi.rank()) + " and " +
                                       std::to_string(psi.rank()));
  }
  GenWord word;
  for (int i = 0; i < phi.rank(); ++i) {
    GroupElement g = phi.images[i].Inverse() * psi.images[i];
    if (!g.IsIdentity()) word.push_back(MultGGen{i, std::move(g)});
  }
  return GAutomorphism::FromGenWord(phi.rank(), std::move(word));
}

// ---------------------------------------------------------------------------

SeparationWord MakeSeparationWord(const Group& group,
                                  const std::vector<GroupElement>& excluded,
                                  const GroupElement& target,
                                  const WitnessOptions& options) {
  SeparationWord out;
  out.target = target;
  for (const auto& t : excluded) {
    if (!Contains(out.excluded, t)) out.excluded.push_back(t);
  }
  if (out.excluded.empty()) {
    Fail(ErrorCode::kPrecondition, "nothing to separate from");
  }
  if (Contains(out.excluded, target)) {
    Fail(ErrorCode::kPrecondition,
         "target " + target.ToString() + " lies in the excluded set");
  }
  if (out.excluded.size() > options.max_excluded) {
    Fail(ErrorCode::kPrecondition,
         "excluded set has " + std::to_string(out.excluded.size()) +
             " elements; cap is " + std::to_string(options.max_excluded));
  }
  RequireAdmissible(group);

  // w_1(x) = t_1^-1 x
  FreeProductWord w =
      FreeProductWord::Reduce(1, {out.excluded[0].Inverse(), Power{0, 1}});
  GroupElement w_at_target = out.excluded[0].Inverse() * target;

  std::vector<GroupElement> space;
  if (out.excluded.size() > 1) space = group.SearchSpace(options.v_radius);
  for (std::size_t i = 1; i < out.excluded.size(); ++i) {
    const GroupElement& t = out.excluded[i];
    const GroupElement a = w_at_target;
    const GroupElement base = t.Inverse() * target;
    std::optional<GroupElement> chosen;
    GroupElement value;
    for (const auto& h : space) {
      GroupElement b = h.Inverse() * base * h;
      GroupElement c = a.Inverse() * b.Inverse() * a * b;
      if (!c.IsIdentity()) {
        chosen = h;
        value = std::move(c);
        break;
      }
    }
    if (!chosen) {
      if (group.IsFinite()) {
        Fail(ErrorCode::kPrecondition,
             "no conjugator found; is " + group.name() + " simple?");
      }
      Fail(ErrorCode::kBoundExceeded,
           "no conjugator h_" + std::to_string(i + 1) +
               " within search radius " + std::to_string(options.v_radius));
    }
    // u = (t^-1 x)^h = h^-1 t^-1 x h; w_i = w^-1 u^-1 w u.
    FreeProductWord u =
        FreeProductWord::Reduce(1, {chosen->Inverse() * t.Inverse(), Power{0, 1}, *chosen});
    WordBuilder b(1);
    b.AppendInverse(w);
    b.AppendInverse(u);
    b.Append(w);
    b.Append(u);
    w = std::move(b).Build();
    w_at_target = std::move(value);
    out.conjugators.push_back(*chosen);
  }
  out.word = std::move(w);
  return out;
}

bool VerifySeparation(const SeparationWord& s, const Group& group) {
  for (const auto& t : s.excluded) {
    if (!Evaluate(s.word, HomPoint{{t}}, group).IsIdentity()) return false;
  }
  return !Evaluate(s.word, HomPoint{{s.target}}, group).IsIdentity();
}

// ---------------------------------------------------------------------------

ConjDecomposition ConjDecompose(const Group& group, const GroupElement& target,
                                const GroupElement& base) {
  const PermutationGroup& g = RequireFinite(group, "conjugate decomposition");
  if (base.IsIdentity()) {
    Fail(ErrorCode::kPrecondition, "cannot decompose over the identity");
  }
  const int n = static_cast<int>(g.order());
  const int u = g.IndexOf(base);
  const int c = g.IndexOf(target);
  if (u < 0 || c < 0) {
    Fail(ErrorCode::kBackendMismatch, "element not in " + g.name());
  }

  // Distinct factor values, each labelled by its first (conjugator, sign).
  struct Edge {
    int value;
    int conjugator;
    int sign;
  };
  std::vector<Edge> edges;
  std::vector<bool> have(n, false);
  for (int h = 0; h < n; ++h) {
    for (int sign : {1, -1}) {
      int base_idx = sign > 0 ? u : g.Inv(u);
      int v = g.Mul(g.Mul(g.Inv(h), base_idx), h);
      if (!have[v]) {
        have[v] = true;
        edges.push_back({v, h, sign});
      }
    }
  }

  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty() && !seen[c]) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      int y = g.Mul(x, edges[k].value);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        via[y] = static_cast<int>(k);
        queue.push_back(y);
      }
    }
  }
  if (!seen[c]) {
    Fail(ErrorCode::kPrecondition, target.ToString() +
                                       " is not in the normal closure of " +
                                       base.ToString());
  }
  ConjDecomposition d{base, target, {}};
  for (int x = c; x != 0; x = parent[x]) {
    const Edge& e = edges[via[x]];
    d.factors.push_back({e.sign, g.At(e.conjugator)});
  }
  std::reverse(d.factors.begin(), d.factors.end());
  return d;
}

GroupElement Reconstruct(const ConjDecomposition& d, const Group& group) {
  GroupElement acc = group.identity();
  for (const auto& f : d.factors) {
    GroupElement b = f.sign > 0 ? d.base : d.base.Inverse();
    acc = acc * f.conjugator.Inverse() * b * f.conjugator;
  }
  return acc;
}

// ---------------------------------------------------------------------------

SpecialSet SpecialSet::Canonical(const Group& group, int rank, std::size_t k) {
  const PermutationGroup& g = RequireFinite(group, "the canonical special set");
  if (k + 1 > g.order()) {
    Fail(ErrorCode::kPrecondition, "special set of size " + std::to_string(k) +
                                       " needs more than " +
                                       std::to_string(g.order() - 1) +
                                       " non-identity elements");
  }
  if (g.order() < 2) Fail(ErrorCode::kPrecondition, "group is trivial");
  SpecialSet s;
  s.rank = rank;
  for (std::size_t i = 0; i < k; ++i) s.t.push_back(g.At(static_cast<int>(i) + 1));
  s.z = g.At(1);
  return s;
}

std::vector<HomPoint> SpecialSet::Points(const Group& group) const {
  std::vector<HomPoint> pts;
  for (const auto& ti : t) {
    HomPoint p = HomPoint::Trivial(group, rank);
    p.images[0] = ti;
    pts.push_back(std::move(p));
  }
  return pts;
}

HomPoint SpecialSet::Base(const Group& group) const {
  HomPoint p = HomPoint::Trivial(group, rank);
  p.images[1] = z;
  return p;
}

bool SpecialSet::Contains(const HomPoint& phi, const Group& group) const {
  const auto pts = Points(group);
  return std::find(pts.begin(), pts.end(), phi) != pts.end();
}

GAutomorphism FixerWitness(const SpecialSet& special, const HomPoint& phi,
                           const Group& group, const WitnessOptions& options) {
  const PermutationGroup& fg = RequireFinite(group, "the fixer witness");
  const int n = special.rank;
  if (n < 2) Fail(ErrorCode::kPrecondition, "fixer witness needs rank >= 2");
  if (phi.rank() != n) Fail(ErrorCode::kRankMismatch, "point rank differs from special set");
  if (special.z.IsIdentity()) Fail(ErrorCode::kPrecondition, "z must not be the identity");
  for (std::size_t a = 0; a < special.t.size(); ++a) {
    for (std::size_t b = a + 1; b < special.t.size(); ++b) {
      if (special.t[a] == special.t[b]) {
        Fail(ErrorCode::kPrecondition, "special set points are not distinct");
      }
    }
  }
  if (special.Contains(phi, group)) {
    Fail(ErrorCode::kPrecondition, phi.ToString() + " lies in the special set");
  }
  RequireAdmissible(group);

  const HomPoint target = special.Base(group);
  GenWord word;
  if (phi == target) return GAutomorphism::Identity(n);
  HomPoint p = phi;
  const auto& T = special.t;

  // (a) Move phi(x_1) out of T by right-multiplying x_1 with conjugates of
  // x_j^{+-1}, for the first j >= 2 with phi(x_j) != e.
  if (!T.empty() && Contains(T, p.images[0])) {
    int j = 1;
    while (j < n && p.images[j].IsIdentity()) ++j;
    // j < n because phi is not in the special set.
    std::optional<GroupElement> v;
    for (const auto& cand : fg.elements()) {
      if (!Contains(T, p.images[0] * cand)) {
        v = cand;
        break;
      }
    }
    ConjDecomposition d = ConjDecompose(group, *v, p.images[j]);
    GenWord gens;
    for (const auto& f : d.factors) {
      gens.push_back(MultXGen{0, j, f.sign, NonTrivial(f.conjugator)});
    }
    Emit(word, p, gens);
  }

  // (b) Bring phi(x_2) to z with x_2 -> x_2 prod w(x_1)^{+-h}, where w
  // separates T from phi(x_1); the factor vanishes on the special set.
  if (p.images[1] != special.z) {
    FreeProductWord w(n);
    GroupElement w_at_p;
    if (T.empty()) {
      w = FreeProductWord::Generator(n, 0);
      w_at_p = p.images[0];
      if (w_at_p.IsIdentity()) {
        // x_1 must not vanish at phi.
        Emit(word, p, {MultGGen{0, special.z}});
        w_at_p = p.images[0];
      }
    } else {
      SeparationWord sep = MakeSeparationWord(group, T, p.images[0], options);
      w = Relabel(sep.word, n, 0);
      w_at_p = Evaluate(sep.word, HomPoint{{p.images[0]}}, group);
    }
    ConjDecomposition d =
        ConjDecompose(group, p.images[1].Inverse() * special.z, w_at_p);
    WordBuilder b(n);
    for (const auto& f : d.factors) {
      b.Append(f.conjugator.Inverse());
      if (f.sign > 0) {
        b.Append(w);
      } else {
        b.AppendInverse(w);
      }
      b.Append(f.conjugator);
    }
    Emit(word, p, RightMultiplyBy(1, std::move(b).Build()));
  }

  // (c) Clear every other coordinate with conjugates of x_2^{+-1}, which
  // vanish on the special set.
  for (int i = 0; i < n; ++i) {
    if (i == 1 || p.images[i].IsIdentity()) continue;
    ConjDecomposition d = ConjDecompose(group, p.images[i].Inverse(), special.z);
    GenWord gens;
    for (const auto& f : d.factors) {
      gens.push_back(MultXGen{i, 1, f.sign, NonTrivial(f.conjugator)});
    }
    Emit(word, p, gens);
  }
  return GAutomorphism::FromGenWord(n, std::move(word));
}

// ---------------------------------------------------------------------------

namespace {

void RequireDistinct(const std::vector<HomPoint>& pts, const char* which) {
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (pts[a] == pts[b]) {
        Fail(ErrorCode::kPrecondition,
             std::string(which) + " tuple repeats " + pts[a].ToString());
      }
    }
  }
}

// An automorphism sending pts[j] to the j-th point of the canonical special
// set of size |pts|.
GAutomorphism ToSpecial(const std::vector<HomPoint>& pts, const Group& group,
                        const WitnessOptions& options) {
  const int n = pts[0].rank();
  const SpecialSet full = SpecialSet::Canonical(group, n, pts.size());
  const std::vector<HomPoint> targets = full.Points(group);
  GAutomorphism beta = TransitivityWitness(pts[0], targets[0]);
  for (std::size_t m = 1; m < pts.size(); ++m) {
    SpecialSet prefix = full;
    prefix.t.resize(m);
    HomPoint q = Act(pts[m], beta, group);
    GAutomorphism gamma = FixerWitness(prefix, q, group, options);
    GAutomorphism delta = FixerWitness(prefix, targets[m], group, options);
    beta = Compose(Compose(beta, gamma), Inverse(delta));
  }
  return beta;
}

}  // namespace

GAutomorphism KTransitivityWitness(const std::vector<HomPoint>& src,
                                   const std::vector<HomPoint>& dst,
                                   const Group& group,
                                   const WitnessOptions& options) {
  if (src.empty() || src.size() != dst.size()) {
    Fail(ErrorCode::kPrecondition, "source and target tuples must be non-empty "
                                   "and of equal length");
  }
  const int n = src[0].rank();
  for (const auto* side : {&src, &dst}) {
    for (const auto& p : *side) {
      if (p.rank() != n) Fail(ErrorCode::kRankMismatch, "points of different rank");
    }
  }
  RequireDistinct(src, "source");
  RequireDistinct(dst, "target");
  if (src.size() == 1) return TransitivityWitness(src[0], dst[0]);

  const PermutationGroup& fg = RequireFinite(group, "k-transitivity witness");
  if (n < 2) Fail(ErrorCode::kPrecondition, "k-transitivity needs rank >= 2");
  if (src.size() > fg.order()) {
    Fail(ErrorCode::kPrecondition, "k exceeds |G|");
  }
  RequireAdmissible(group);
  if (src == dst) return GAutomorphism::Identity(n);

  const std::size_t k = src.size();
  std::vector<HomPoint> src_head(src.begin(), src.end() - 1);
  std::vector<HomPoint> dst_head(dst.begin(), dst.end() - 1);
  GAutomorphism to_src = ToSpecial(src_head, group, options);
  GAutomorphism to_dst = ToSpecial(dst_head, group, options);
  SpecialSet special = SpecialSet::Canonical(group, n, k - 1);
  GAutomorphism bridge_src =
      FixerWitness(special, Act(src.back(), to_src, group), group, options);
  GAutomorphism bridge_dst =
      FixerWitness(special, Act(dst.back(), to_dst, group), group, options);
  return Compose(Compose(to_src, bridge_src),
                 Compose(Inverse(bridge_dst), Inverse(to_dst)));
}

// ---------------------------------------------------------------------------

GAutomorphism RetractionT(const GAutomorphism& a, const Group& group) {
  std::vector<FreeProductWord> imgs;
  for (const auto& w : a.images()) imgs.push_back(TPart(w, group));
  return GAutomorphism::FromImages(std::move(imgs));
}

GenWord RewriteToY(const GenWord& word, int rank, const Group& group) {
  GenWord out;
  // G-coordinates of the images of the prefix read so far.
  HomPoint g = HomPoint::Trivial(group, rank);
  for (const auto& s : word) {
    Validate(s, rank);
    if (const auto* inv = std::get_if<InvertGen>(&s)) {
      out.push_back(s);
      if (!g.images[inv->i].IsIdentity()) {
        out.push_back(ConjGen{inv->i, g.images[inv->i]});
      }
    } else if (const auto* mx = std::get_if<MultXGen>(&s)) {
      const GroupElement h = mx->h ? *mx->h : group.identity();
      GroupElement k = mx->sign > 0
                           ? h * g.images[mx->i].Inverse()
                           : g.images[mx->j] * h * g.images[mx->i].Inverse();
      out.push_back(MultXGen{mx->i, mx->j, mx->sign, NonTrivial(std::move(k))});
    } else if (!std::holds_alternative<MultGGen>(s)) {
      out.push_back(s);
    }
    g = Act(g, s);
  }
  return out;
}

}  // namespace gfa
