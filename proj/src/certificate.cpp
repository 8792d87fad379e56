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

#include "certificate.hpp"

#include <numeric>

#include "automorphism.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "orbits.hpp"
#include "witnesses.hpp"

namespace gfa {
namespace {

using Json = nlohmann::ordered_json;

Json Header(const char* kind, const Group& g, const std::string& claim) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  j["group"] = g.name();
  j["claim"] = claim;
  return j;
}

Record Finish(Json j, bool passed, std::string method,
              Outcome fail = Outcome::kFailed) {
  Record r;
  r.outcome = passed ? Outcome::kVerified : fail;
  j["check"]["method"] = std::move(method);
  j["check"]["passed"] = passed;
  j["outcome"] = passed ? "verified"
                 : fail == Outcome::kBoundExceeded ? "bound_exceeded"
                                                   : "failed";
  r.json = std::move(j);
  return r;
}

Json Points(const std::vector<HomPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.ToString());
  return a;
}

bool NoMultG(const GenWord& w) {
  for (const auto& s : w) {
    if (!InY(s)) return false;
  }
  return true;
}

int InferRank(std::string_view word) {
  int rank = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 'x') continue;
    std::size_t k = i + 1;
    int v = 0;
    while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k])) &&
           v < 1000) {
      v = v * 10 + (word[k++] - '0');
    }
    rank = std::max(rank, v);
  }
  return rank;
}

IdentityOptions ToIdentity(const RunOptions& o) {
  IdentityOptions io;
  io.threads = o.threads;
  io.max_states = o.max_states;
  if (o.v_radius) io.v_radius = *o.v_radius;
  return io;
}

}  // namespace

std::vector<HomPoint> ParsePointTuple(std::string_view text, const Group& g) {
  std::vector<HomPoint> out;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    if (text[i] != '[') {
      Fail(ErrorCode::kParse, "expected '[' at offset " + std::to_string(i) +
                                  " in \"" + std::string(text) + "\"");
    }
    std::size_t depth = 0, k = i;
    for (; k < text.size(); ++k) {
      if (text[k] == '[' || text[k] == '{' || text[k] == '(') ++depth;
      if (text[k] == ']' || text[k] == '}' || text[k] == ')') --depth;
      if (depth == 0) break;
    }
    if (k == text.size()) {
      Fail(ErrorCode::kParse, "unbalanced '[' in \"" + std::string(text) + "\"");
    }
    out.push_back(HomPoint::Parse(text.substr(i, k + 1 - i), g));
    i = k + 1;
  }
  if (out.empty()) Fail(ErrorCode::kParse, "empty point tuple");
  return out;
}

Record Separate(const Group& g, const std::vector<std::string>& excluded,
                const std::string& target, const RunOptions& o) {
  std::vector<GroupElement> T;
  for (const auto& t : excluded) T.push_back(g.Parse(t));
  GroupElement x = g.Parse(target);
  WitnessOptions wo;
  if (o.v_radius) wo.v_radius = *o.v_radius;
  SeparationWord s = MakeSeparationWord(g, T, x, wo);

  Json j = Header("separation", g, "w(t) = e for every t in T and w(g) != e");
  for (const auto& t : s.excluded) j["input"]["excluded"].push_back(t.ToString());
  j["input"]["target"] = x.ToString();
  j["witness"]["word"] = s.word.ToString();
  j["witness"]["x_letters"] = s.word.FreeLength();
  j["witness"]["conjugators"] = Json::array();
  for (const auto& h : s.conjugators) j["witness"]["conjugators"].push_back(h.ToString());
  bool ok = true;
  for (const auto& t : s.excluded) {
    GroupElement v = Evaluate(s.word, HomPoint{{t}}, g);
    j["check"]["values_on_excluded"].push_back(v.ToString());
    ok = ok && v.IsIdentity();
  }
  GroupElement v = Evaluate(s.word, HomPoint{{x}}, g);
  j["check"]["value_on_target"] = v.ToString();
  ok = ok && !v.IsIdentity();
  return Finish(std::move(j), ok, "evaluate");
}

Record Transitivity(const Group& g, const std::string& from,
                    const std::string& to) {
  HomPoint phi = HomPoint::Parse(from, g);
  HomPoint psi = HomPoint::Parse(to, g);
  GAutomorphism a = TransitivityWitness(phi, psi);
  Json j = Header("transitivity", g, "act(from, alpha) = to");
  j["input"]["from"] = phi.ToString();
  j["input"]["to"] = psi.ToString();
  j["witness"]["genword"] = ToString(a.genword());
  HomPoint got = ActViaImages(phi, a, g);
  j["check"]["image"] = got.ToString();
  return Finish(std::move(j), got == psi, "evaluate images at from");
}

Record KTransitivity(const Group& g, const std::string& src,
                     const std::string& dst, std::optional<int> k,
                     const RunOptions& o) {
  auto s = ParsePointTuple(src, g);
  auto d = ParsePointTuple(dst, g);
  if (k && (static_cast<std::size_t>(*k) != s.size() ||
            static_cast<std::size_t>(*k) != d.size())) {
    Fail(ErrorCode::kPrecondition, "--k " + std::to_string(*k) +
                                       " does not match the tuple lengths " +
                                       std::to_string(s.size()) + " and " +
                                       std::to_string(d.size()));
  }
  WitnessOptions wo;
  if (o.v_radius) wo.v_radius = *o.v_radius;
  GAutomorphism a = KTransitivityWitness(s, d, g, wo);
  Json j = Header("k-transitivity", g,
                  "act(src[j], alpha) = dst[j] for every j, and alpha^-1 maps back");
  j["input"]["k"] = s.size();
  j["input"]["src"] = Points(s);
  j["input"]["dst"] = Points(d);
  j["witness"]["genword"] = ToString(a.genword());
  j["witness"]["genword_length"] = a.genword().size();
  // Recheck through the literal generators rather than the indexed forms.
  const GenWord lit = ExpandLiteral(a.genword(), a.rank());
  GAutomorphism la = GAutomorphism::FromGenWord(a.rank(), lit);
  GAutomorphism inv = Inverse(la);
  bool ok = true;
  std::vector<HomPoint> fwd, back;
  for (std::size_t i = 0; i < s.size(); ++i) {
    fwd.push_back(Act(s[i], la, g));
    back.push_back(Act(d[i], inv, g));
    ok = ok && fwd.back() == d[i] && back.back() == s[i];
  }
  j["check"]["forward"] = Points(fwd);
  j["check"]["backward"] = Points(back);
  j["check"]["literal_length"] = lit.size();
  return Finish(std::move(j), ok, "act via literal generators");
}

Record RewriteStab(const Group& g, int rank, const std::string& genword) {
  GenWord w = ParseGenWord(genword, rank, g);
  GenWord y = RewriteToY(w, rank, g);
  GAutomorphism a = GAutomorphism::FromGenWord(rank, w);
  GAutomorphism ya = GAutomorphism::FromGenWord(rank, y);
  GAutomorphism t = RetractionT(a, g);
  Json j = Header("rewrite-stab", g,
                  "the Y-word has no multg and equals T(alpha) on images");
  j["input"]["rank"] = rank;
  j["input"]["genword"] = ToString(w);
  j["witness"]["genword"] = ToString(y);
  Json imgs = Json::array();
  for (const auto& im : t.images()) imgs.push_back(im.ToString());
  j["witness"]["images"] = imgs;
  const bool y_only = NoMultG(y);
  const bool equal = ya == t;
  const HomPoint e = HomPoint::Trivial(g, rank);
  const bool stabilizes = Act(e, a, g) == e;
  j["check"]["y_only"] = y_only;
  j["check"]["images_equal"] = equal;
  j["check"]["input_stabilizes_trivial_point"] = stabilizes;
  bool ok = y_only && equal;
  if (stabilizes) {
    const bool fixed = ya == a;
    j["check"]["equals_input"] = fixed;
    ok = ok && fixed;
  }
  return Finish(std::move(j), ok, "image comparison");
}

Record MixedIdentity(const Group& g, int rank, const std::string& word,
                     const RunOptions& o) {
  if (rank <= 0) rank = InferRank(word);
  FreeProductWord w = FreeProductWord::Parse(word, rank, g);
  MixedIdentityVerdict v = IsMixedIdentity(w, g, ToIdentity(o));
  Json j = Header("mixed-identity", g, "");
  j["input"]["rank"] = rank;
  j["input"]["word"] = w.ToString();
  j["witness"]["substitutions_checked"] = v.substitutions_checked;
  switch (v.verdict) {
    case Verdict::kIdentity:
      j["claim"] = "w evaluates to e at every point of G^n";
      j["witness"]["verdict"] = "identity";
      return Finish(std::move(j), true, "exhaustive evaluation");
    case Verdict::kNotIdentity: {
      j["claim"] = "w evaluates non-trivially at the counterexample";
      j["witness"]["verdict"] = "not_identity";
      j["witness"]["counterexample"] = v.counterexample->ToString();
      GroupElement val = Evaluate(w, *v.counterexample, g);
      j["check"]["value"] = val.ToString();
      return Finish(std::move(j), !val.IsIdentity(), "evaluate");
    }
    case Verdict::kUnknownAtBound:
      j["claim"] = "no counterexample within the search bound";
      j["witness"]["verdict"] = "unknown_at_bound";
      return Finish(std::move(j), false, "bounded search",
                    Outcome::kBoundExceeded);
  }
  return {};
}

Record Kernel(const Group& g, int rank, const RunOptions& o) {
  KernelElement k = MakeKernelElement(g, rank, ToIdentity(o));
  Json j = Header("kernel", g,
                  "alpha is not the identity and fixes every point of G^n");
  j["input"]["rank"] = rank;
  j["witness"]["law"] = k.law.ToString();
  j["witness"]["exponent"] = k.exponent;
  j["witness"]["genword"] = ToString(k.alpha.genword());
  j["witness"]["image_x1"] = k.alpha.image(0).ToString();
  const bool nontrivial = !k.alpha.IsIdentity();
  std::uint64_t checked = 0;
  const bool fixes = FixesAllPoints(k.alpha, g, ToIdentity(o), &checked);
  j["check"]["non_identity"] = nontrivial;
  j["check"]["points_checked"] = checked;
  return Finish(std::move(j), nontrivial && fixes, "exhaustive act");
}

Record Faithful(const Group& g, int rank, const std::string& genword,
                const RunOptions& o) {
  GenWord w = ParseGenWord(genword, rank, g);
  GAutomorphism a = GAutomorphism::FromGenWord(rank, w);
  FaithfulnessResult f = FaithfulnessWitness(a, g, ToIdentity(o));
  Json j = Header("faithful", g, "");
  j["input"]["rank"] = rank;
  j["input"]["genword"] = ToString(w);
  j["witness"]["substitutions_checked"] = f.substitutions_checked;
  switch (f.outcome) {
    case FaithfulnessOutcome::kWitness: {
      j["claim"] = "act(point, alpha) != point";
      j["witness"]["outcome"] = "witness";
      j["witness"]["point"] = f.point->ToString();
      j["witness"]["coordinate"] = f.coordinate + 1;
      HomPoint moved = Act(*f.point, a, g);
      j["check"]["image"] = moved.ToString();
      return Finish(std::move(j), moved != *f.point, "act");
    }
    case FaithfulnessOutcome::kInKernel: {
      j["claim"] = "alpha fixes every point of G^n (in kernel, exhaustive)";
      j["witness"]["outcome"] = "in_kernel";
      std::uint64_t checked = 0;
      bool fixes = FixesAllPoints(a, g, ToIdentity(o), &checked);
      j["check"]["points_checked"] = checked;
      return Finish(std::move(j), fixes, "exhaustive act");
    }
    case FaithfulnessOutcome::kBoundExceeded:
      j["claim"] = "no moved point within the search bound";
      j["witness"]["outcome"] = "bound_exceeded";
      return Finish(std::move(j), false, "bounded search",
                    Outcome::kBoundExceeded);
  }
  return {};
}

Record Orbits(const Group& g, int rank, bool pairs, const RunOptions& o) {
  const PermutationGroup* fg = g.AsFinite();
  if (fg == nullptr) {
    Fail(ErrorCode::kUnsupported, "orbit enumeration needs a finite backend");
  }
  OrbitOptions oo;
  oo.threads = o.threads;
  oo.max_states = o.max_states;
  OrbitReport r = pairs ? OrbitsOnPairs(*fg, rank, oo) : OrbitsOnPoints(*fg, rank, oo);
  Json j = Header(pairs ? "pair-orbits" : "orbits", g,
                  "orbit partition of the state space under the generators");
  j["input"]["rank"] = rank;
  j["report"]["state_space_size"] = r.state_space_size;
  j["report"]["num_orbits"] = r.num_orbits;
  j["report"]["sizes"] = r.sizes;
  j["report"]["representatives"] = r.representatives;
  j["report"]["generators"] = r.generators;
  j["report"]["seconds"] = r.seconds;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(r.checksum));
  j["report"]["checksum"] = hex;
  const std::uint64_t sum =
      std::accumulate(r.sizes.begin(), r.sizes.end(), std::uint64_t{0});
  j["check"]["sizes_sum"] = sum;
  return Finish(std::move(j), sum == r.state_space_size, "size sum");
}

Record VCalc(const std::string& op, const std::vector<std::string>& args) {
  ThompsonV v;
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      Fail(ErrorCode::kParse, "vcalc " + op + " takes " + std::to_string(n) +
                                  " argument(s), got " +
                                  std::to_string(args.size()));
    }
  };
  Json j = Header("vcalc", v, op);
  j["input"]["op"] = op;
  j["input"]["args"] = args;
  if (op == "mul") {
    need(2);
    GroupElement a = v.Parse(args[0]), b = v.Parse(args[1]);
    GroupElement ab = a * b;
    j["result"] = ab.ToString();
    // (a*b)(s) == b(a(s)) on the domain leaves of a*b.
    const auto& m = std::get<PrefixExchangeMap>(ab.payload());
    const auto& ma = std::get<PrefixExchangeMap>(a.payload());
    const auto& mb = std::get<PrefixExchangeMap>(b.payload());
    bool ok = true;
    for (const auto& [dom, ran] : m.pairs()) {
      std::string s = dom + "0101";
      auto x = ma.Apply(s);
      auto y = x ? mb.Apply(*x) : std::nullopt;
      ok = ok && y && m.Apply(s) == y;
    }
    return Finish(std::move(j), ok, "apply on leaves");
  }
  if (op == "inv") {
    need(1);
    GroupElement a = v.Parse(args[0]);
    GroupElement ai = a.Inverse();
    j["result"] = ai.ToString();
    return Finish(std::move(j), (a * ai).IsIdentity(), "a * a^-1 = e");
  }
  if (op == "reduce") {
    need(1);
    j["result"] = v.Parse(args[0]).ToString();
    return Finish(std::move(j), true, "parse");
  }
  if (op == "apply") {
    need(2);
    GroupElement a = v.Parse(args[0]);
    for (char c : args[1]) {
      if (c != '0' && c != '1') Fail(ErrorCode::kParse, "binary string expected");
    }
    auto out = std::get<PrefixExchangeMap>(a.payload()).Apply(args[1]);
    if (!out) {
      Fail(ErrorCode::kPrecondition,
           "\"" + args[1] + "\" is shorter than every matching domain leaf");
    }
    j["result"] = *out;
    auto back = std::get<PrefixExchangeMap>(a.Inverse().payload()).Apply(*out);
    return Finish(std::move(j), back == args[1], "inverse maps back");
  }
  if (op == "ball") {
    need(1);
    int r = 0;
    try {
      r = std::stoi(args[0]);
    } catch (const std::exception&) {
      Fail(ErrorCode::kParse, "radius must be an integer");
    }
    auto ball = v.EnumerateBall(r);
    j["result"]["size"] = ball.size();
    if (ball.size() <= 64) {
      for (const auto& x : ball) j["result"]["elements"].push_back(x.ToString());
    }
    return Finish(std::move(j), true, "enumeration");
  }
  Fail(ErrorCode::kParse, "unknown vcalc op \"" + op +
                              "\" (mul, inv, apply, reduce, ball)");
}

}  // namespace gfa
