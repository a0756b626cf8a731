#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "planeauto/et_engine.hpp"
#include "planeauto/param_curves.hpp"
#include "planeauto/tame_auto.hpp"

namespace planeauto {

// Insertion-ordered so the output is byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

inline Json rat_json(const Rat& r) { return to_string(r); }

inline Json profile_json(const std::optional<TriangularForm>& f) {
  if (!f) return nullptr;
  return Json{{"n", f->n}, {"m", f->m}, {"a", rat_json(f->a)}, {"b", rat_json(f->b)}};
}

inline Json step_json(const ETStep& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, AddPower1>) {
          return {{"type", "ET1"}, {"mu", rat_json(s.mu)}, {"k", s.k}};
        } else if constexpr (std::is_same_v<S, AddPower2>) {
          return {{"type", "ET2"}, {"mu", rat_json(s.mu)}, {"k", s.k}};
        } else {
          return {{"type", "linear"},
                  {"matrix", {rat_json(s.a1), rat_json(s.a2), rat_json(s.b1), rat_json(s.b2)}}};
        }
      },
      step);
}

inline Json step_json(const AutoStep& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Affine>) {
          return {{"type", "affine"},
                  {"matrix", {rat_json(s.a1), rat_json(s.a2), rat_json(s.b1), rat_json(s.b2)}},
                  {"shift", {rat_json(s.a3), rat_json(s.b3)}}};
        } else {
          const bool ex = std::is_same_v<S, ElemX>;
          Json j{{"type", ex ? "elem_x" : "elem_y"}, {"f", s.f.to_string(ex ? "y" : "x")}};
          // A single term c*v^k also reports mu and k.
          std::size_t nonzero = 0;
          for (const auto& c : s.f.coeffs()) nonzero += sgn(c) != 0;
          if (nonzero == 1) {
            j["mu"] = rat_json(s.f.leading_coeff());
            j["k"] = s.f.degree();
          }
          return j;
        }
      },
      step);
}

inline Json trace_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(step_json(s));
  return {{"steps", steps}, {"degrees", t.degree_profile}};
}

/// Steps of alpha with the total degree of the subject after each one.
inline Json trace_json(const TameAuto& alpha, BiPoly subject) {
  Json steps = Json::array();
  Json degrees = Json::array();
  for (const auto& s : alpha.steps) {
    steps.push_back(step_json(s));
    subject = apply_step(s, subject);
    degrees.push_back(subject.total_degree());
  }
  return {{"steps", steps}, {"degrees", degrees}};
}

// Images of x and y after each prefix; degrees are the larger of the two.
inline Json map_trace_json(const TameAuto& alpha) {
  Json steps = Json::array();
  Json degrees = Json::array();
  TameAuto prefix;
  for (const auto& s : alpha.steps) {
    steps.push_back(step_json(s));
    prefix.steps.push_back(s);
    auto [gx, gy] = images(prefix);
    degrees.push_back(std::max(gx.total_degree(), gy.total_degree()));
  }
  return {{"steps", steps}, {"degrees", degrees}};
}

inline std::string verdict_key(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

inline Json decision_json(const EquivDecision& d, const BiPoly& p) {
  Json j{{"verdict", verdict_key(d.verdict)}};
  j["witness"] = d.witness ? trace_json(*d.witness, p) : Json(nullptr);
  j["scale"] = d.witness ? rat_json(d.scale) : Json(nullptr);
  j["reason"] = d.reason;
  return j;
}

}  // namespace planeauto
