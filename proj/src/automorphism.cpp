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

#include "automorphism.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

#include "error.hpp"

namespace gfa {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

PermuteBasis Transposition(int rank, int a, int b) {
  PermuteBasis p{std::vector<int>(rank)};
  std::iota(p.images.begin(), p.images.end(), 0);
  std::swap(p.images[a], p.images[b]);
  return p;
}

bool IsIdentityPerm(const PermuteBasis& p) {
  for (std::size_t k = 0; k < p.images.size(); ++k) {
    if (p.images[k] != static_cast<int>(k)) return false;
  }
  return true;
}

std::size_t TotalLetters(const std::vector<FreeProductWord>& words) {
  std::size_t n = 0;
  for (const auto& w : words) n += w.length();
  return n;
}

// Images of a o s, given the images of a.
std::vector<FreeProductWord> ComposeImages(std::vector<FreeProductWord> imgs,
                                           const XGen& s) {
  std::visit(
      Overloaded{
          [&](const PermuteBasis& p) {
            std::vector<FreeProductWord> out;
            out.reserve(imgs.size());
            for (int k : p.images) out.push_back(imgs[k]);
            imgs = std::move(out);
          },
          [&](const InvertGen& g) { imgs[g.i] = Invert(imgs[g.i]); },
          [&](const ConjGen& g) {
            WordBuilder b(imgs[g.i].rank());
            b.Append(g.g.Inverse());
            b.Append(imgs[g.i]);
            b.Append(g.g);
            imgs[g.i] = std::move(b).Build();
          },
          [&](const MultXGen& g) {
            WordBuilder b(imgs[g.i]);
            if (g.h) b.Append(g.h->Inverse());
            if (g.sign > 0) {
              b.Append(imgs[g.j]);
            } else {
              b.AppendInverse(imgs[g.j]);
            }
            if (g.h) b.Append(*g.h);
            imgs[g.i] = std::move(b).Build();
          },
          [&](const MultGGen& g) {
            WordBuilder b(imgs[g.i]);
            b.Append(g.g);
            imgs[g.i] = std::move(b).Build();
          },
      },
      s);
  return imgs;
}

std::vector<FreeProductWord> IdentityImages(int rank) {
  std::vector<FreeProductWord> imgs;
  for (int k = 0; k < rank; ++k) {
    imgs.push_back(FreeProductWord::Generator(rank, k));
  }
  return imgs;
}

}  // namespace

// ---------------------------------------------------------------------------
// XGen

XGen InverseOf(const XGen& s) {
  return std::visit(
      Overloaded{
          [](const PermuteBasis& p) -> XGen {
            PermuteBasis q{std::vector<int>(p.images.size())};
            for (std::size_t k = 0; k < p.images.size(); ++k) {
              q.images[p.images[k]] = static_cast<int>(k);
            }
            return q;
          },
          [](const InvertGen& g) -> XGen { return g; },
          [](const ConjGen& g) -> XGen { return ConjGen{g.i, g.g.Inverse()}; },
          [](const MultXGen& g) -> XGen {
            return MultXGen{g.i, g.j, -g.sign, g.h};
          },
          [](const MultGGen& g) -> XGen {
            return MultGGen{g.i, g.g.Inverse()};
          },
      },
      s);
}

bool InY(const XGen& s) { return !std::holds_alternative<MultGGen>(s); }

bool IsLiteral(const XGen& s) {
  return std::visit(Overloaded{
                        [](const PermuteBasis&) { return true; },
                        [](const InvertGen& g) { return g.i == 0; },
                        [](const ConjGen& g) { return g.i == 0; },
                        [](const MultXGen& g) {
                          return g.i == 0 && g.j == 1 && !g.h;
                        },
                        [](const MultGGen& g) { return g.i == 0; },
                    },
                    s);
}

void Validate(const XGen& s, int rank) {
  auto check_index = [rank](int i) {
    if (i < 0 || i >= rank) {
      Fail(ErrorCode::kPrecondition, "generator index " + std::to_string(i + 1) +
                                         " outside 1.." + std::to_string(rank));
    }
  };
  std::visit(Overloaded{
                 [&](const PermuteBasis& p) {
                   if (static_cast<int>(p.images.size()) != rank) {
                     Fail(ErrorCode::kPrecondition,
                          "sigma must list " + std::to_string(rank) + " images");
                   }
                   std::vector<bool> seen(rank, false);
                   for (int k : p.images) {
                     check_index(k);
                     if (seen[k]) {
                       Fail(ErrorCode::kPrecondition, "sigma is not a permutation");
                     }
                     seen[k] = true;
                   }
                 },
                 [&](const InvertGen& g) { check_index(g.i); },
                 [&](const ConjGen& g) { check_index(g.i); },
                 [&](const MultXGen& g) {
                   check_index(g.i);
                   check_index(g.j);
                   if (g.i == g.j) {
                     Fail(ErrorCode::kPrecondition, "multx needs distinct indices");
                   }
                   if (g.sign != 1 && g.sign != -1) {
                     Fail(ErrorCode::kPrecondition, "multx sign must be +1 or -1");
                   }
                 },
                 [&](const MultGGen& g) { check_index(g.i); },
             },
             s);
}

std::string ToString(const XGen& s) {
  return std::visit(
      Overloaded{
          [](const PermuteBasis& p) {
            std::string out = "sigma(";
            for (std::size_t k = 0; k < p.images.size(); ++k) {
              if (k) out += ' ';
              out += std::to_string(p.images[k] + 1);
            }
            return out + ")";
          },
          [](const InvertGen& g) { return "inv(" + std::to_string(g.i + 1) + ")"; },
          [](const ConjGen& g) {
            return "conj(" + std::to_string(g.i + 1) + "){" + g.g.ToString() + "}";
          },
          [](const MultXGen& g) {
            std::string out = "multx(" + std::to_string(g.i + 1) + "," +
                              std::to_string(g.j + 1) + "," +
                              (g.sign > 0 ? "+" : "-") + ")";
            if (g.h) out += "{" + g.h->ToString() + "}";
            return out;
          },
          [](const MultGGen& g) {
            return "multg(" + std::to_string(g.i + 1) + "){" + g.g.ToString() + "}";
          },
      },
      s);
}

std::string ToString(const GenWord& w) {
  if (w.empty()) return "id";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += ToString(s);
  }
  return out;
}

GenWord ParseGenWord(std::string_view text, int rank, const Group& group) {
  GenWord word;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    Fail(ErrorCode::kParse, what + " at offset " + std::to_string(pos) +
                                " in generator word \"" + std::string(text) + "\"");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto index = [&](const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }) || tok.size() > 6) {
      fail("bad index \"" + tok + "\"");
    }
    int v = std::stoi(tok);
    if (v < 1 || v > rank) {
      Fail(ErrorCode::kRankMismatch, "index " + tok + " outside 1.." +
                                         std::to_string(rank));
    }
    return v - 1;
  };
  while (true) {
    skip();
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string name(text.substr(start, pos - start));
    if (name == "id") continue;
    if (pos >= text.size() || text[pos] != '(') fail("expected '(' after \"" + name + "\"");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unterminated '('");
    std::string args(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    std::optional<std::string> braced;
    if (pos < text.size() && text[pos] == '{') {
      int depth = 0;
      std::size_t b = pos;
      for (; pos < text.size(); ++pos) {
        if (text[pos] == '{') ++depth;
        if (text[pos] == '}' && --depth == 0) break;
      }
      if (pos >= text.size()) fail("unterminated '{'");
      braced = std::string(text.substr(b + 1, pos - b - 1));
      ++pos;
    }
    std::vector<std::string> fields;
    {
      std::string cur;
      for (char c : args) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty()) fields.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) fields.push_back(cur);
    }
    auto element = [&]() -> GroupElement {
      if (!braced) fail(name + " needs a {group element}");
      return group.Parse(*braced);
    };
    XGen s;
    if (name == "sigma") {
      PermuteBasis p;
      for (const auto& f : fields) p.images.push_back(index(f));
      s = p;
    } else if (name == "inv") {
      if (fields.size() != 1) fail("inv takes one index");
      s = InvertGen{index(fields[0])};
    } else if (name == "conj") {
      if (fields.size() != 1) fail("conj takes one index");
      s = ConjGen{index(fields[0]), element()};
    } else if (name == "multg") {
      if (fields.size() != 1) fail("multg takes one index");
      s = MultGGen{index(fields[0]), element()};
    } else if (name == "multx") {
      if (fields.size() != 3 || (fields[2] != "+" && fields[2] != "-")) {
        fail("multx takes (i,j,+|-)");
      }
      std::optional<GroupElement> h;
      if (braced) {
        h = group.Parse(*braced);
        if (h->IsIdentity()) h.reset();
      }
      s = MultXGen{index(fields[0]), index(fields[1]), fields[2] == "+" ? 1 : -1,
                   std::move(h)};
    } else {
      fail("unknown generator \"" + name + "\"");
    }
    Validate(s, rank);
    word.push_back(std::move(s));
  }
  return word;
}

GenWord ExpandLiteral(const GenWord& w, int rank) {
  GenWord out;
  auto conjugate_by_swap = [&](int i, XGen inner) {
    if (i == 0) {
      out.push_back(std::move(inner));
      return;
    }
    out.push_back(Transposition(rank, 0, i));
    out.push_back(std::move(inner));
    out.push_back(Transposition(rank, 0, i));
  };
  for (const auto& s : w) {
    std::visit(
        Overloaded{
            [&](const PermuteBasis& p) { out.push_back(p); },
            [&](const InvertGen& g) { conjugate_by_swap(g.i, InvertGen{0}); },
            [&](const ConjGen& g) { conjugate_by_swap(g.i, ConjGen{0, g.g}); },
            [&](const MultGGen& g) { conjugate_by_swap(g.i, MultGGen{0, g.g}); },
            [&](const MultXGen& g) {
              PermuteBasis rho{{g.i, g.j}};
              for (int k = 0; k < rank; ++k) {
                if (k != g.i && k != g.j) rho.images.push_back(k);
              }
              const bool move = !IsIdentityPerm(rho);
              if (move) out.push_back(rho);
              if (g.h) {
                out.push_back(Transposition(rank, 0, 1));
                out.push_back(ConjGen{0, *g.h});
                out.push_back(Transposition(rank, 0, 1));
              }
              out.push_back(MultXGen{0, 1, g.sign, std::nullopt});
              if (g.h) {
                out.push_back(Transposition(rank, 0, 1));
                out.push_back(ConjGen{0, g.h->Inverse()});
                out.push_back(Transposition(rank, 0, 1));
              }
              if (move) out.push_back(InverseOf(rho));
            },
        },
        s);
  }
  return out;
}

GenWord RightMultiplyBy(int i, const FreeProductWord& w, std::size_t max_letters) {
  if (w.Mentions(i)) {
    Fail(ErrorCode::kPrecondition,
         "right multiplier of x" + std::to_string(i + 1) + " mentions it");
  }
  if (w.FreeLength() > max_letters) {
    Fail(ErrorCode::kBoundExceeded, "right multiplier too long");
  }
  GenWord out;
  for (const auto& l : w.letters()) {
    if (const auto* g = std::get_if<GroupElement>(&l)) {
      out.push_back(MultGGen{i, *g});
      continue;
    }
    const auto& p = std::get<Power>(l);
    const int sign = p.exponent > 0 ? 1 : -1;
    Exponent count = p.exponent > 0 ? p.exponent : Exponent(-p.exponent);
    for (Exponent k = 0; k < count; ++k) {
      out.push_back(MultXGen{i, p.generator, sign, std::nullopt});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GAutomorphism

struct GAutomorphism::ImageCache {
  std::once_flag once;
  std::vector<FreeProductWord> images;
};

GAutomorphism::GAutomorphism(int rank, std::optional<GenWord> genword,
                             std::shared_ptr<ImageCache> cache)
    : rank_(rank), genword_(std::move(genword)), cache_(std::move(cache)) {}

GAutomorphism GAutomorphism::Identity(int rank) {
  return FromGenWord(rank, {});
}

GAutomorphism GAutomorphism::FromGenWord(int rank, GenWord word) {
  if (rank < 1) Fail(ErrorCode::kPrecondition, "rank must be positive");
  for (const auto& s : word) Validate(s, rank);
  return GAutomorphism(rank, std::move(word), std::make_shared<ImageCache>());
}

GAutomorphism GAutomorphism::FromImages(std::vector<FreeProductWord> images) {
  if (images.empty()) Fail(ErrorCode::kPrecondition, "rank must be positive");
  const int rank = static_cast<int>(images.size());
  for (const auto& w : images) {
    if (w.rank() != rank) {
      Fail(ErrorCode::kRankMismatch, "image rank differs from automorphism rank");
    }
  }
  auto cache = std::make_shared<ImageCache>();
  std::call_once(cache->once, [&] { cache->images = std::move(images); });
  return GAutomorphism(rank, std::nullopt, std::move(cache));
}

const GenWord& GAutomorphism::genword() const {
  if (!genword_) {
    Fail(ErrorCode::kNotInvertible,
         "endomorphism given by images carries no generator word");
  }
  return *genword_;
}

const std::vector<FreeProductWord>& GAutomorphism::images() const {
  std::call_once(cache_->once, [this] {
    std::vector<FreeProductWord> imgs = IdentityImages(rank_);
    for (const auto& s : *genword_) {
      imgs = ComposeImages(std::move(imgs), s);
      if (TotalLetters(imgs) > kImageLetterCap) {
        Fail(ErrorCode::kBoundExceeded,
             "automorphism images exceed " + std::to_string(kImageLetterCap) +
                 " letters");
      }
    }
    cache_->images = std::move(imgs);
  });
  return cache_->images;
}

bool GAutomorphism::IsIdentity() const {
  if (genword_ && genword_->empty()) return true;
  const auto& imgs = images();
  for (int k = 0; k < rank_; ++k) {
    if (imgs[k] != FreeProductWord::Generator(rank_, k)) return false;
  }
  return true;
}

bool operator==(const GAutomorphism& a, const GAutomorphism& b) {
  return a.rank_ == b.rank_ && a.images() == b.images();
}

// ---------------------------------------------------------------------------

FreeProductWord Apply(const GAutomorphism& a, const FreeProductWord& w) {
  if (w.rank() != a.rank()) {
    Fail(ErrorCode::kRankMismatch, "applying a rank " + std::to_string(a.rank()) +
                                       " automorphism to a rank " +
                                       std::to_string(w.rank()) + " word");
  }
  const auto& imgs = a.images();
  WordBuilder b(w.rank());
  for (const auto& l : w.letters()) {
    if (const auto* g = std::get_if<GroupElement>(&l)) {
      b.Append(*g);
    } else {
      const auto& p = std::get<Power>(l);
      b.AppendPower(imgs[p.generator], p.exponent, GAutomorphism::kImageLetterCap);
    }
  }
  return std::move(b).Build();
}

GAutomorphism Compose(const GAutomorphism& a, const GAutomorphism& b) {
  if (a.rank() != b.rank()) {
    Fail(ErrorCode::kRankMismatch, "composing automorphisms of different rank");
  }
  if (a.has_genword() && b.has_genword()) {
    GenWord w = a.genword();
    w.insert(w.end(), b.genword().begin(), b.genword().end());
    return GAutomorphism::FromGenWord(a.rank(), std::move(w));
  }
  std::vector<FreeProductWord> imgs;
  for (const auto& w : b.images()) imgs.push_back(Apply(a, w));
  return GAutomorphism::FromImages(std::move(imgs));
}

GAutomorphism Inverse(const GAutomorphism& a) {
  const GenWord& w = a.genword();
  GenWord inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(InverseOf(*it));
  return GAutomorphism::FromGenWord(a.rank(), std::move(inv));
}

HomPoint Act(const HomPoint& phi, const XGen& s) {
  HomPoint out = phi;
  auto& v = out.images;
  std::visit(Overloaded{
                 [&](const PermuteBasis& p) {
                   for (std::size_t k = 0; k < p.images.size(); ++k) {
                     v[k] = phi.images[p.images[k]];
                   }
                 },
                 [&](const InvertGen& g) { v[g.i] = v[g.i].Inverse(); },
                 [&](const ConjGen& g) { v[g.i] = g.g.Inverse() * v[g.i] * g.g; },
                 [&](const MultXGen& g) {
                   GroupElement xj = g.sign > 0 ? v[g.j] : v[g.j].Inverse();
                   if (g.h) {
                     v[g.i] = v[g.i] * g.h->Inverse() * xj * *g.h;
                   } else {
                     v[g.i] = v[g.i] * xj;
                   }
                 },
                 [&](const MultGGen& g) { v[g.i] = v[g.i] * g.g; },
             },
             s);
  return out;
}

HomPoint Act(const HomPoint& phi, const GAutomorphism& a, const Group& group) {
  if (phi.rank() != a.rank()) {
    Fail(ErrorCode::kRankMismatch, "acting on a rank " +
                                       std::to_string(phi.rank()) +
                                       " point with a rank " +
                                       std::to_string(a.rank()) + " automorphism");
  }
  if (!a.has_genword()) return ActViaImages(phi, a, group);
  HomPoint p = phi;
  for (const auto& s : a.genword()) p = Act(p, s);
  return p;
}

HomPoint ActViaImages(const HomPoint& phi, const GAutomorphism& a,
                      const Group& group) {
  if (phi.rank() != a.rank()) {
    Fail(ErrorCode::kRankMismatch, "point and automorphism ranks differ");
  }
  HomPoint out;
  for (const auto& w : a.images()) out.images.push_back(Evaluate(w, phi, group));
  return out;
}

GAutomorphism EmbedG(const GroupElement& g, int rank) {
  if (g.IsIdentity()) return GAutomorphism::Identity(rank);
  return GAutomorphism::FromGenWord(rank, {MultGGen{0, g}});
}

GAutomorphism EmbedFreeProductPair(const GroupElement& g, FreeProductSide side,
                                   int rank) {
  if (rank < 2) {
    Fail(ErrorCode::kPrecondition, "the free-product embedding needs rank >= 2");
  }
  if (g.IsIdentity()) return GAutomorphism::Identity(rank);
  if (side == FreeProductSide::kA) return EmbedG(g, rank);
  return GAutomorphism::FromGenWord(rank, {MultXGen{0, 1, -1, std::nullopt},
                                           MultGGen{0, g},
                                           MultXGen{0, 1, 1, std::nullopt}});
}

}  // namespace gfa
