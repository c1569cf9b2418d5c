// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "knotforge/laurent.hpp"

namespace knotforge::detail {

struct RenderTerm {
  Int coeff;
  int q_exp;
  int a_exp;
};

inline std::string render_power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

/// Human notation, ascending A-exponent then ascending q-exponent.
inline std::string render_terms(std::vector<RenderTerm> terms,
                                const char* qvar = "q", const char* avar = "A") {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return x.a_exp != y.a_exp ? x.a_exp < y.a_exp : x.q_exp < y.q_exp;
  });
  std::string out;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    const Int mag = abs(t.coeff);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = render_power(qvar, t.q_exp);
    const std::string apow = render_power(avar, t.a_exp);
    if (!apow.empty()) mono += mono.empty() ? apow : " " + apow;
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + " " + mono;
  }
  return out;
}

}  // namespace knotforge::detail
