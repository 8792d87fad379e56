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

#include "free_product.hpp"

#include <cctype>
#include <limits>

#include "error.hpp"

namespace gfa {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void SkipSpace() {
    while (pos_ < s_.size() && IsSpace(s_[pos_])) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= s_.size();
  }
  bool Consume(char c) {
    SkipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Expect(char c) {
    if (!Consume(c)) Error(std::string("expected '") + c + "'");
  }
  // Text up to the brace matching an already consumed '{'.
  std::string_view Braced() {
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < s_.size()) {
      char c = s_[pos_++];
      if (c == '{') ++depth;
      if (c == '}' && --depth == 0) return s_.substr(start, pos_ - 1 - start);
    }
    Error("unbalanced '{'");
  }
  // Text up to (not including) the next top-level char in `stops`.
  std::string_view Until(std::string_view stops) {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '{' || c == '(') ++depth;
      if (c == '}' || c == ')') --depth;
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }
  Exponent Integer() {
    SkipSpace();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
      SkipSpace();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) Error("expected an integer");
    Exponent v(std::string(s_.substr(start, pos_ - start)));
    return negative ? Exponent(-v) : v;
  }
  [[noreturn]] void Error(const std::string& what) const {
    Fail(ErrorCode::kParse, what + " at offset " + std::to_string(pos_) +
                                " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// WordBuilder

void WordBuilder::Append(const Letter& letter) {
  auto& stack = word_.letters_;
  if (const auto* g = std::get_if<GroupElement>(&letter)) {
    if (g->IsIdentity()) return;
    if (!stack.empty()) {
      if (auto* top = std::get_if<GroupElement>(&stack.back())) {
        GroupElement merged = *top * *g;
        if (merged.IsIdentity()) {
          stack.pop_back();
        } else {
          *top = std::move(merged);
        }
        return;
      }
    }
    stack.push_back(*g);
    return;
  }
  const auto& p = std::get<Power>(letter);
  if (p.generator < 0 || p.generator >= word_.rank_) {
    Fail(ErrorCode::kRankMismatch,
         "generator x" + std::to_string(p.generator + 1) +
             " does not exist in rank " + std::to_string(word_.rank_));
  }
  if (p.exponent == 0) return;
  if (!stack.empty()) {
    if (auto* top = std::get_if<Power>(&stack.back());
        top != nullptr && top->generator == p.generator) {
      top->exponent += p.exponent;
      if (top->exponent == 0) stack.pop_back();
      return;
    }
  }
  stack.push_back(p);
}

void WordBuilder::Append(const FreeProductWord& w) {
  if (w.rank() != word_.rank_) {
    Fail(ErrorCode::kRankMismatch, "rank " + std::to_string(w.rank()) +
                                       " word used in rank " +
                                       std::to_string(word_.rank_));
  }
  for (const auto& l : w.letters()) Append(l);
}

void WordBuilder::AppendInverse(const FreeProductWord& w) {
  if (w.rank() != word_.rank_) {
    Fail(ErrorCode::kRankMismatch, "rank " + std::to_string(w.rank()) +
                                       " word used in rank " +
                                       std::to_string(word_.rank_));
  }
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (const auto* g = std::get_if<GroupElement>(&*it)) {
      Append(g->Inverse());
    } else {
      const auto& p = std::get<Power>(*it);
      Append(Power{p.generator, -p.exponent});
    }
  }
}

void WordBuilder::AppendPower(const FreeProductWord& w, const Exponent& e,
                              std::size_t max_letters) {
  if (e == 0 || w.IsEmpty()) return;
  if (w.length() == 1) {
    if (const auto* p = std::get_if<Power>(&w.letters()[0])) {
      Append(Power{p->generator, p->exponent * e});
      return;
    }
  }
  Exponent count = e < 0 ? Exponent(-e) : e;
  if (count * w.length() + length() > max_letters) {
    Fail(ErrorCode::kBoundExceeded,
         "word power exceeds " + std::to_string(max_letters) + " letters");
  }
  for (Exponent k = 0; k < count; ++k) {
    if (e > 0) {
      Append(w);
    } else {
      AppendInverse(w);
    }
  }
}

// ---------------------------------------------------------------------------
// FreeProductWord

FreeProductWord FreeProductWord::Reduce(int rank,
                                        const std::vector<Letter>& raw) {
  WordBuilder b(rank);
  for (const auto& l : raw) b.Append(l);
  return std::move(b).Build();
}

FreeProductWord FreeProductWord::Generator(int rank, int generator,
                                           Exponent exp) {
  return Reduce(rank, {Power{generator, std::move(exp)}});
}

FreeProductWord FreeProductWord::Constant(int rank, const GroupElement& g) {
  return Reduce(rank, {g});
}

std::size_t FreeProductWord::FreeLength() const {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (const auto& l : letters_) {
    if (const auto* p = std::get_if<Power>(&l)) {
      Exponent a = p->exponent < 0 ? Exponent(-p->exponent) : p->exponent;
      if (a > kMax - total) return kMax;
      total += static_cast<std::size_t>(a);
    }
  }
  return total;
}

bool FreeProductWord::Mentions(int generator) const {
  for (const auto& l : letters_) {
    if (const auto* p = std::get_if<Power>(&l); p && p->generator == generator)
      return true;
  }
  return false;
}

std::string FreeProductWord::ToString() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " * ";
    if (const auto* g = std::get_if<GroupElement>(&l)) {
      out += "c{" + g->ToString() + "}";
    } else {
      const auto& p = std::get<Power>(l);
      out += "x" + std::to_string(p.generator + 1);
      if (p.exponent != 1) out += "^" + p.exponent.str();
    }
  }
  return out;
}

FreeProductWord FreeProductWord::Parse(std::string_view text, int rank,
                                       const Group& group) {
  Cursor in(text);
  std::vector<Letter> raw;
  if (Trim(text) == "1") return FreeProductWord(rank);
  do {
    if (in.Consume('x')) {
      Exponent idx = in.Integer();
      if (idx < 1 || idx > rank) {
        Fail(ErrorCode::kRankMismatch,
             "generator x" + idx.str() + " does not exist in rank " +
                 std::to_string(rank));
      }
      Exponent exp = 1;
      if (in.Consume('^')) exp = in.Integer();
      raw.push_back(Power{static_cast<int>(idx) - 1, exp});
    } else if (in.Consume('c')) {
      in.Expect('{');
      raw.push_back(group.Parse(Trim(in.Braced())));
    } else if (in.Consume('1')) {
      // explicit identity factor
    } else {
      in.Error("expected a term");
    }
  } while (in.Consume('*'));
  if (!in.AtEnd()) in.Error("trailing input");
  return Reduce(rank, raw);
}

FreeProductWord Concat(const FreeProductWord& u, const FreeProductWord& v) {
  WordBuilder b(u);
  b.Append(v);
  return std::move(b).Build();
}

FreeProductWord Invert(const FreeProductWord& u) {
  WordBuilder b(u.rank());
  b.AppendInverse(u);
  return std::move(b).Build();
}

GroupElement Pow(const GroupElement& g, const Exponent& e,
                 const GroupElement& identity) {
  GroupElement base = e < 0 ? g.Inverse() : g;
  Exponent k = e < 0 ? Exponent(-e) : e;
  GroupElement result = identity;
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// HomPoint

std::string HomPoint::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += "; ";
    out += images[i].ToString();
  }
  return out + "]";
}

HomPoint HomPoint::Parse(std::string_view text, const Group& group) {
  Cursor in(text);
  in.Expect('[');
  HomPoint p;
  do {
    p.images.push_back(group.Parse(Trim(in.Until(";]"))));
  } while (in.Consume(';'));
  in.Expect(']');
  if (!in.AtEnd()) in.Error("trailing input");
  return p;
}

HomPoint HomPoint::Trivial(const Group& group, int rank) {
  return HomPoint{std::vector<GroupElement>(rank, group.identity())};
}

// ---------------------------------------------------------------------------

GroupElement Evaluate(const FreeProductWord& w, const HomPoint& phi,
                      const Group& group) {
  if (phi.rank() != w.rank()) {
    Fail(ErrorCode::kRankMismatch,
         "evaluating a rank " + std::to_string(w.rank()) +
             " word at a point of rank " + std::to_string(phi.rank()));
  }
  const GroupElement e = group.identity();
  GroupElement acc = e;
  for (const auto& l : w.letters()) {
    if (const auto* g = std::get_if<GroupElement>(&l)) {
      acc = acc * *g;
    } else {
      const auto& p = std::get<Power>(l);
      acc = acc * Pow(phi.images[p.generator], p.exponent, e);
    }
  }
  return acc;
}

GroupElement Pi(const FreeProductWord& w, const Group& group) {
  GroupElement acc = group.identity();
  for (const auto& l : w.letters()) {
    if (const auto* g = std::get_if<GroupElement>(&l)) acc = acc * *g;
  }
  return acc;
}

FreeProductWord TPart(const FreeProductWord& w, const Group& group) {
  WordBuilder b(w);
  b.Append(Pi(w, group).Inverse());
  return std::move(b).Build();
}

FreeProductWord KillG(const FreeProductWord& w) {
  WordBuilder b(w.rank());
  for (const auto& l : w.letters()) {
    if (std::holds_alternative<Power>(l)) b.Append(l);
  }
  return std::move(b).Build();
}

}  // namespace gfa
