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

// gfa: command-line front end over the C API.
//
// Exit status: 0 verified, 1 verification failure, 2 usage or parse error,
// 3 bound exceeded.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfa/gfa.h"
#include "json.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

int ExitCode(gfa_status s) {
  switch (s) {
    case GFA_OK: return kExitVerified;
    case GFA_VERIFY_FAILED:
    case GFA_INTERNAL: return kExitFailed;
    case GFA_BOUND_EXCEEDED: return kExitBound;
    default: return kExitUsage;
  }
}

void PrintText(const nlohmann::ordered_json& j, const std::string& prefix,
               std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object()) {
      PrintText(v, key, os);
    } else if (v.is_string()) {
      os << key << ": " << v.get<std::string>() << "\n";
    } else if (v.is_array() && !v.empty() && v[0].is_string()) {
      os << key << ":\n";
      for (const auto& e : v) os << "  " << e.get<std::string>() << "\n";
    } else {
      os << key << ": " << v.dump() << "\n";
    }
  }
}

struct Global {
  std::string group = "A5";
  std::string format = "text";
  int threads = 1;
  std::uint64_t max_states = 0;
  int v_radius = 0;

  gfa_options Options() const { return {threads, max_states, v_radius}; }
};

// Runs `call` with a fresh group handle and prints its record.
int Run(const Global& g, bool needs_group,
        const std::function<gfa_status(gfa_group*, const gfa_options*, char**)>& call) {
  gfa_group* group = nullptr;
  if (needs_group) {
    gfa_status s = gfa_group_create(g.group.c_str(), &group);
    if (s != GFA_OK) {
      std::cerr << "gfa: " << gfa_status_name(s) << ": " << gfa_last_error() << "\n";
      return ExitCode(s);
    }
  }
  gfa_options opts = g.Options();
  char* out = nullptr;
  gfa_status s = call(group, &opts, &out);
  gfa_group_free(group);
  if (out != nullptr) {
    auto j = nlohmann::ordered_json::parse(out);
    gfa_string_free(out);
    if (g.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      PrintText(j, "", std::cout);
    }
  }
  if (s != GFA_OK) {
    std::cerr << "gfa: " << gfa_status_name(s) << ": " << gfa_last_error() << "\n";
  }
  return ExitCode(s);
}

std::vector<const char*> CStrings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free products G*F_n, G-automorphisms and witnesses for their action"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--group", g.group,
                 "A5, An, Sn, Cn, trivial, gens:<perm>;<perm>..., or V")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-states", g.max_states,
                 "state cap (default: GFA_MAX_STATES, else 1e7 points / 2e7 pairs)");
  app.add_option("--v-radius", g.v_radius, "search radius for V");
  app.fallthrough();

  std::function<int()> action;

  auto* sep = app.add_subcommand("separate", "separation word for T against g");
  std::vector<std::string> exclude;
  std::string target;
  sep->add_option("--exclude", exclude, "excluded elements T")->required();
  sep->add_option("--target", target, "element g not in T")->required();
  sep->callback([&] {
    action = [&] {
      auto cs = CStrings(exclude);
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_separate(gr, cs.data(), cs.size(), target.c_str(), o, out);
      });
    };
  });

  auto* tr = app.add_subcommand("transitivity", "automorphism mapping one point to another");
  std::string from, to;
  tr->add_option("--from", from, "point [g1; ...; gn]")->required();
  tr->add_option("--to", to, "point [h1; ...; hn]")->required();
  tr->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options*, char** out) {
        return gfa_transitivity(gr, from.c_str(), to.c_str(), out);
      });
    };
  });

  auto* kt = app.add_subcommand("ktrans", "automorphism mapping a k-tuple of points to another");
  int k = 0;
  std::string src, dst;
  kt->add_option("--k", k, "tuple length (checked against the tuples)");
  kt->add_option("--src", src, "points [..][..]...")->required();
  kt->add_option("--dst", dst, "points [..][..]...")->required();
  kt->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_ktrans(gr, k, src.c_str(), dst.c_str(), o, out);
      });
    };
  });

  auto* rw = app.add_subcommand("rewrite-stab", "retraction onto the stabilizer as a Y-word");
  std::string genword;
  int n = 2;
  rw->add_option("--genword", genword, "generator word")->required();
  rw->add_option("--n", n, "rank")->capture_default_str();
  rw->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options*, char** out) {
        return gfa_rewrite_stab(gr, n, genword.c_str(), out);
      });
    };
  });

  auto* mi = app.add_subcommand("mixed-identity", "decide whether a word is a mixed identity");
  std::string word;
  int word_rank = 0;
  mi->add_option("--word", word, "word in G*F_n")->required();
  mi->add_option("--n", word_rank, "rank (default: largest x index)");
  mi->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_mixed_identity(gr, word_rank, word.c_str(), o, out);
      });
    };
  });

  auto* ke = app.add_subcommand("kernel", "non-trivial automorphism acting trivially");
  ke->add_option("--n", n, "rank")->capture_default_str();
  ke->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_kernel(gr, n, o, out);
      });
    };
  });

  auto* fa = app.add_subcommand("faithful", "point moved by an automorphism");
  fa->add_option("--genword", genword, "generator word")->required();
  fa->add_option("--n", n, "rank")->capture_default_str();
  fa->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_faithful(gr, n, genword.c_str(), o, out);
      });
    };
  });

  auto* orb = app.add_subcommand("orbits", "orbits on G^n");
  orb->add_option("--n", n, "rank")->capture_default_str();
  orb->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_orbits(gr, n, o, out);
      });
    };
  });

  auto* po = app.add_subcommand("pair-orbits", "orbits on ordered pairs of points");
  po->add_option("--n", n, "rank")->capture_default_str();
  po->callback([&] {
    action = [&] {
      return Run(g, true, [&](gfa_group* gr, const gfa_options* o, char** out) {
        return gfa_pair_orbits(gr, n, o, out);
      });
    };
  });

  auto* vc = app.add_subcommand("vcalc", "arithmetic in Thompson's group V");
  std::string op;
  std::vector<std::string> vargs;
  vc->add_option("op", op, "mul a b | inv a | apply a s | reduce a | ball r")
      ->required()
      ->check(CLI::IsMember({"mul", "inv", "apply", "reduce", "ball"}));
  vc->add_option("args", vargs, "operands");
  vc->callback([&] {
    action = [&] {
      auto cs = CStrings(vargs);
      return Run(g, false, [&](gfa_group*, const gfa_options*, char** out) {
        return gfa_vcalc(op.c_str(), cs.data(), cs.size(), out);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return action();
}
