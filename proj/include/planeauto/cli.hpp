#pragma once

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "planeauto/embeddings.hpp"
#include "planeauto/groebner.hpp"
#include "planeauto/json_io.hpp"
#include "planeauto/param_curves.hpp"
#include "planeauto/parse.hpp"

namespace planeauto::cli {

inline constexpr int kDecided = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUndecided = 2;

struct Options {
  bool json = false;
  bool trace = false;
  std::size_t budget = kDefaultGroebnerBudget;
  unsigned k = 0;
  std::vector<unsigned> primes;
  std::string order = "grlex";
};

struct Command {
  std::string name;
  std::vector<std::string> args;
};

struct Result {
  int exit_code = kDecided;
  std::string output;  // newline-terminated
};

namespace detail {

inline unsigned e_k(const AddPower1& e) { return e.k; }
inline unsigned e_k(const AddPower2& e) { return e.k; }
inline unsigned e_k(const LinearET&) { return 1; }

inline std::string step_text(const AutoStep& s) {
  auto [gx, gy] = step_images(s);
  return "(x, y) -> (" + gx.to_string() + ", " + gy.to_string() + ")";
}

// "u", "-1/2*v^3": a term of a linear combination, with its sign.
inline std::string signed_term(const Rat& c, const std::string& what, bool first) {
  if (sgn(c) == 0) return first ? "0" : "";
  std::string out = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  const Rat mag = abs(c);
  if (mag != 1) out += to_string(mag) + "*";
  return out + what;
}

inline std::string combo(const Rat& c1, const std::string& w1, const Rat& c2, const std::string& w2) {
  if (sgn(c1) == 0) return signed_term(c2, w2, true);
  return signed_term(c1, w1, true) + signed_term(c2, w2, false);
}

inline std::string step_text(const ETStep& s) {
  return std::visit(
      [](const auto& e) -> std::string {
        using S = std::decay_t<decltype(e)>;
        const std::string k = "^" + std::to_string(e_k(e));
        if constexpr (std::is_same_v<S, AddPower1>) {
          return "(u, v) -> (" + combo(1, "u", e.mu, "v" + k) + ", v)";
        } else if constexpr (std::is_same_v<S, AddPower2>) {
          return "(u, v) -> (u, " + combo(1, "v", e.mu, "u" + k) + ")";
        } else {
          return "(u, v) -> (" + combo(e.a1, "u", e.a2, "v") + ", " + combo(e.b1, "u", e.b2, "v") + ")";
        }
      },
      s);
}

inline void list_steps(std::ostream& os, const TameAuto& alpha) {
  if (alpha.steps.empty()) os << "  identity\n";
  for (std::size_t i = 0; i < alpha.steps.size(); ++i)
    os << "  " << i + 1 << ". " << step_text(alpha.steps[i]) << "\n";
}

inline void expect_args(const Command& c, std::size_t lo, std::size_t hi) {
  if (c.args.size() < lo || c.args.size() > hi) {
    const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + "+";
    throw InvalidArgument(c.name + " expects " + want + " argument(s), got " + std::to_string(c.args.size()));
  }
}

inline Result run_canon(const Command& c, const Options& o) {
  expect_args(c, 1, 1);
  const BiPoly p = parse_bipoly(c.args[0]);
  const auto canon = canonicalize(p);
  const bool decided = canon.status == CanonStatus::Canonical || canon.status == CanonStatus::LinearPoly;
  std::ostringstream os;
  if (o.json) {
    Json j{{"command", "canon"}, {"input", p.to_string()}, {"result", canon.result.to_string()},
           {"status", to_string(canon.status)}, {"profile", profile_json(canon.profile)},
           {"automorphism", trace_json(canon.automorphism, p)}};
    if (!canon.obstruction.empty()) j["obstruction"] = canon.obstruction;
    if (o.trace) {
      Json inter = Json::array();
      BiPoly cur = p;
      for (const auto& s : canon.automorphism.steps) inter.push_back((cur = apply_step(s, cur)).to_string());
      j["intermediates"] = inter;
    }
    os << j.dump() << "\n";
  } else {
    os << to_string(canon.status) << ": " << canon.result.to_string() << "\n";
    if (canon.profile) os << "profile: n=" << canon.profile->n << " m=" << canon.profile->m << "\n";
    if (!canon.obstruction.empty()) os << "needs " << canon.obstruction << "\n";
    if (o.trace) {
      os << "automorphism:\n";
      list_steps(os, canon.automorphism);
    }
  }
  return {decided ? kDecided : kUndecided, os.str()};
}

inline Result run_equiv(const Command& c, const Options& o) {
  expect_args(c, 2, 2);
  const BiPoly p = parse_bipoly(c.args[0]);
  const BiPoly q = parse_bipoly(c.args[1]);
  const auto d = decide_equivalence(p, q, o.budget);
  std::ostringstream os;
  if (o.json) {
    Json j{{"command", "equiv"}};
    j.update(decision_json(d, p));
    os << j.dump() << "\n";
  } else {
    os << to_string(d.verdict) << "\n";
    if (d.witness) {
      os << "witness:\n";
      list_steps(os, *d.witness);
      os << "scale: " << to_string(d.scale) << "\n";
    }
    os << "reason: " << d.reason << "\n";
  }
  return {d.verdict == Verdict::Unknown ? kUndecided : kDecided, os.str()};
}

inline Result run_implicitize(const Command& c, const Options& o) {
  expect_args(c, 2, 2);
  const ParamCurve curve{parse_unipoly(c.args[0]), parse_unipoly(c.args[1])};
  const auto r = implicitize(curve);
  std::ostringstream os;
  if (o.json) {
    Json j{{"command", "implicitize"}, {"p", r.p.to_string()}, {"mult", r.mult}};
    if (o.trace) {
      const auto n = normalize_curve(curve);
      j["normalized"] = {{"u", n.curve.u.to_string()}, {"v", n.curve.v.to_string()}};
      j["trace"] = trace_json(n.trace);
      j["automorphism"] = trace_json(n.automorphism, r.p);
    }
    os << j.dump() << "\n";
  } else {
    os << "p = " << r.p.to_string() << "\nmult = " << r.mult << "\n";
    if (o.trace) {
      const auto n = normalize_curve(curve);
      os << "normalized: (" << n.curve.u.to_string() << ", " << n.curve.v.to_string() << ")\n";
      for (std::size_t i = 0; i < n.trace.steps.size(); ++i)
        os << "  " << i + 1 << ". " << step_text(n.trace.steps[i]) << "  max degree " << n.trace.degree_profile[i]
           << "\n";
    }
  }
  return {kDecided, os.str()};
}

inline Result run_decomp(const Command& c, const Options& o) {
  expect_args(c, 2, 2);
  const BiPoly g1 = parse_bipoly(c.args[0]);
  const BiPoly g2 = parse_bipoly(c.args[1]);
  const auto alpha = decompose(g1, g2);
  std::ostringstream os;
  if (o.json) {
    Json j{{"command", "decomp"}, {"automorphism", alpha ? map_trace_json(*alpha) : Json(nullptr)}};
    if (!alpha) j["verdict"] = "NotAutomorphism";
    os << j.dump() << "\n";
  } else if (alpha) {
    os << "automorphism:\n";
    list_steps(os, *alpha);
  } else {
    os << "NotAutomorphism\n";
  }
  return {kDecided, os.str()};
}

inline Result run_coord(const Command& c, const Options& o) {
  expect_args(c, 1, 1);
  const BiPoly p = parse_bipoly(c.args[0]);
  const auto r = is_coordinate(p);
  std::ostringstream os;
  if (o.json) {
    os << Json{{"command", "coord"}, {"coordinate", r ? Json(*r) : Json(nullptr)}}.dump() << "\n";
  } else {
    os << (!r ? "unknown" : *r ? "coordinate" : "not coordinate") << "\n";
  }
  return {r ? kDecided : kUndecided, os.str()};
}

inline Result run_zl(const Command& c, const Options& o) {
  expect_args(c, 1, 1);
  const BiPoly p = parse_bipoly(c.args[0]);
  const auto r = zl_screen(p);
  std::ostringstream os;
  if (o.json) {
    Json j{{"command", "zl"}, {"verdict", to_string(r.kind)}};
    if (r.kind == ScreenKind::Candidate) {
      j["k"] = r.k;
      j["l"] = r.l;
    }
    j["reasons"] = r.reasons;
    os << j.dump() << "\n";
  } else {
    os << to_string(r.kind);
    if (r.kind == ScreenKind::Candidate) os << "(" << r.k << "," << r.l << ")";
    os << "\n";
    for (const auto& why : r.reasons) os << "  " << why << "\n";
  }
  return {r.kind == ScreenKind::Undetermined ? kUndecided : kDecided, os.str()};
}

inline Result run_family(const Command& c, const Options& o) {
  expect_args(c, 0, 0);
  const FamilySpec spec{o.k, o.primes};
  const auto fs = family(spec);
  const auto pairs = verify_family_inequivalent(fs);
  std::vector<bool> iso;
  for (unsigned j = 1; j < spec.k; ++j) iso.push_back(verify_isomorphism(fs[j - 1], fs[j], tietze_witness(spec, j)));
  const bool axis = irreducible_by_axis_sum(fs.front());
  std::ostringstream os;
  if (o.json) {
    Json polys = Json::array(), degrees = Json::array(), pj = Json::array(), ij = Json::array();
    for (const auto& f : fs) {
      polys.push_back(f.to_string());
      degrees.push_back(f.total_degree());
    }
    for (const auto& r : pairs)
      pj.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"profile_i", profile_json(r.profile_i)},
                    {"profile_j", profile_json(r.profile_j)}, {"inequivalent", true}, {"note", r.note}});
    for (std::size_t j = 0; j < iso.size(); ++j) {
      const auto w = tietze_witness(spec, static_cast<unsigned>(j + 1));
      ij.push_back({{"j", j + 1},
                    {"forward", {w.forward.first.to_string(), w.forward.second.to_string()}},
                    {"backward", {w.backward.first.to_string(), w.backward.second.to_string()}},
                    {"verified", bool(iso[j])}});
    }
    os << Json{{"command", "family"}, {"polynomials", polys}, {"degrees", degrees}, {"pairs", pj},
               {"isomorphisms", ij}, {"axis_sum_irreducible", axis}}
              .dump()
       << "\n";
  } else {
    for (std::size_t i = 0; i < fs.size(); ++i)
      os << "f" << i + 1 << " = " << fs[i].to_string() << "  (degree " << fs[i].total_degree() << ")\n";
    for (const auto& r : pairs) os << "f" << r.i + 1 << " vs f" << r.j + 1 << ": inequivalent, " << r.note << "\n";
    for (std::size_t j = 0; j < iso.size(); ++j)
      os << "f" << j + 1 << " ~ f" << j + 2 << " isomorphic: " << (iso[j] ? "verified" : "FAILED") << "\n";
    os << "f1 irreducible by axis sum: " << (axis ? "yes" : "inconclusive") << "\n";
  }
  const bool all_iso = std::all_of(iso.begin(), iso.end(), [](bool b) { return b; });
  if (!all_iso) return {kFailed, os.str()};
  return {kDecided, os.str()};
}

inline Result run_groebner(const Command& c, const Options& o) {
  if (c.args.empty()) throw InvalidArgument("groebner expects at least one polynomial");
  const auto vars = collect_variables(c.args);
  std::vector<MultiPoly> gens;
  for (const auto& a : c.args) gens.push_back(parse_multi(a, vars));
  MonOrder order;
  if (o.order == "lex") {
    order = MonOrder::lex(vars.size());
  } else if (o.order == "grlex") {
    order = MonOrder::grlex(vars.size());
  } else {
    throw InvalidArgument("unknown monomial order '" + o.order + "'");
  }
  const auto gb = buchberger({gens, order}, o.budget);
  bool consistent = true;
  for (const auto& g : gb.generators)
    if (g.is_constant() && !g.is_zero()) consistent = false;
  std::ostringstream os;
  if (o.json) {
    Json basis = Json::array();
    for (const auto& g : gb.generators) basis.push_back(g.to_string());
    os << Json{{"command", "groebner"}, {"vars", vars}, {"order", o.order}, {"basis", basis},
               {"consistent", consistent}}
              .dump()
       << "\n";
  } else {
    os << "basis (" << o.order << "):\n";
    for (const auto& g : gb.generators) os << "  " << g.to_string() << "\n";
    os << (consistent ? "consistent" : "inconsistent") << " over the algebraic closure\n";
  }
  return {kDecided, os.str()};
}

inline Result error_result(const std::string& name, const std::string& what, const Options& o, int code = kFailed) {
  std::ostringstream os;
  if (o.json) {
    os << Json{{"error", name}, {"message", what}}.dump() << "\n";
  } else {
    os << name << ": " << what << "\n";
  }
  return {code, os.str()};
}

}  // namespace detail

/// Runs one subcommand; library errors become exit code 1 with the error name.
inline Result run_command(const Command& c, const Options& o) {
  try {
    if (c.name == "canon") return detail::run_canon(c, o);
    if (c.name == "equiv") return detail::run_equiv(c, o);
    if (c.name == "implicitize") return detail::run_implicitize(c, o);
    if (c.name == "decomp") return detail::run_decomp(c, o);
    if (c.name == "coord") return detail::run_coord(c, o);
    if (c.name == "zl") return detail::run_zl(c, o);
    if (c.name == "family") return detail::run_family(c, o);
    if (c.name == "groebner") return detail::run_groebner(c, o);
    throw InvalidArgument("unknown command '" + c.name + "'");
  } catch (const BudgetExhausted& e) {
    return detail::error_result(e.name(), e.what(), o, kUndecided);
  } catch (const Error& e) {
    return detail::error_result(e.name(), e.what(), o);
  }
}

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"canon", "equiv",  "implicitize", "decomp",
                                              "coord", "zl",     "family",      "groebner"};
  return names;
}

namespace detail {

struct Parsed {
  Command command;
  Options options;
  std::string batch;
};

// Options already in `out` act as defaults, so batch lines inherit the flags
// given on the command line.
inline void configure(CLI::App& app, Parsed& out) {
  app.require_subcommand(0, 1);
  app.add_flag("--json", out.options.json, "emit one JSON object per result");
  app.add_flag("--trace", out.options.trace, "include intermediate steps");
  app.add_option("--batch", out.batch, "run each line of a file as a command");
  app.add_option("--budget", out.options.budget, "Groebner step budget");
  app.add_option("--k", out.options.k, "family size");
  app.add_option("--primes", out.options.primes, "family primes p0,p1,...,pk")->delimiter(',');
  app.add_option("--order", out.options.order, "monomial order for groebner: grlex or lex");
  static const std::map<std::string, std::string> help{
      {"canon", "canonical model of a polynomial"},
      {"equiv", "decide whether an automorphism maps p to q"},
      {"implicitize", "minimal polynomial of x = u(t), y = v(t)"},
      {"decomp", "decompose (g1, g2) into elementary and affine steps"},
      {"coord", "test whether p is a coordinate"},
      {"zl", "screen p for a simply connected fiber"},
      {"family", "build and verify the inequivalent embedding family"},
      {"groebner", "reduced Groebner basis of the given polynomials"}};
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->fallthrough();
    sub->add_option("args", out.command.args, "polynomials");
    sub->callback([&out, name] { out.command.name = name; });
  }
}

inline Result help_result(CLI::App& app, const CLI::ParseError& e, const Options& o) {
  std::ostringstream out, err;
  const int code = app.exit(e, out, err);
  if (code == 0) return {kDecided, out.str()};
  return error_result("UsageError", e.what(), o);
}

inline Result run_batch(const std::string& path, const Options& base);

inline Result run_parsed(CLI::App& app, Parsed& parsed) {
  if (!parsed.batch.empty()) return run_batch(parsed.batch, parsed.options);
  if (parsed.command.name.empty()) return {kFailed, app.help()};
  return run_command(parsed.command, parsed.options);
}

}  // namespace detail

/// Parses and runs one command line (without the program name).
inline Result run_line(const std::string& line, const Options& base = {}) {
  CLI::App app{"plane curve embedding equivalence", "planeauto"};
  detail::Parsed parsed{{}, base, {}};
  detail::configure(app, parsed);
  try {
    app.parse(line, false);
  } catch (const CLI::ParseError& e) {
    return detail::help_result(app, e, parsed.options);
  }
  return detail::run_parsed(app, parsed);
}

/// Same as run_line for already split arguments.
inline Result run_args(std::vector<std::string> args, const Options& base = {}) {
  CLI::App app{"plane curve embedding equivalence", "planeauto"};
  detail::Parsed parsed{{}, base, {}};
  detail::configure(app, parsed);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return detail::help_result(app, e, parsed.options);
  }
  return detail::run_parsed(app, parsed);
}

namespace detail {

// Lines run on a small worker pool; outputs keep the file order.
inline Result run_batch(const std::string& path, const Options& base) {
  std::ifstream in(path);
  if (!in) return error_result("InvalidArgument", "cannot open batch file '" + path + "'", base);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  std::vector<Result> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      results[i] = run_line(lines[i], base);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), lines.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Result out{kDecided, {}};
  for (const auto& r : results) {
    out.output += r.output;
    if (r.exit_code == kFailed) {
      out.exit_code = kFailed;
    } else if (r.exit_code == kUndecided && out.exit_code == kDecided) {
      out.exit_code = kUndecided;
    }
  }
  return out;
}

}  // namespace detail

}  // namespace planeauto::cli
