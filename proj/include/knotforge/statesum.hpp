// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <string>
#include <variant>

#include "knotforge/cycseries.hpp"
#include "knotforge/cyclotomic.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/laurent.hpp"

namespace knotforge {

/// Evaluation strategy. Both give identical results; naive enumerates index
/// tuples and is kept as the reference.
enum class Engine { DP, Naive };

Engine parse_engine(const std::string& s);
std::string to_string(Engine e);

// All stored values omit the prefactor q^{f alpha^2 / 2} (or its root of
// unity analogue); the framing f travels alongside.

struct AdoResult {
  int r = 1;
  int framing = 0;
  CycLaurentA value;
};

struct TruncatedUnified {
  int framing = 0;
  int bound = 0;
  /// value is congruent to the full invariant modulo I_{certified_order}.
  int certified_order = 1;
  LaurentQA value;
};

/// J_n(q^2), normalized to 1 on the unknot, as a polynomial in q.
struct JonesValue {
  int n = 0;
  LaurentQ value;
};

AdoResult ado(const TangleDiagram& d, int r, Engine engine = Engine::DP);
TruncatedUnified unified_truncated(const TangleDiagram& d, int bound,
                                   Engine engine = Engine::DP);
JonesValue jones(const TangleDiagram& d, int n, Engine engine = Engine::DP);
/// The quotient series at the 2r-th root of unity, to precision m.
CycSeries c_series(const TangleDiagram& d, int r, int m, Engine engine = Engine::DP);

/// ev_root(unified_truncated(d, bound).value, r), summed directly over
/// Z[zeta_2r][A^+-1].
CycLaurentA unified_at_root(const TangleDiagram& d, int bound, int r,
                            Engine engine = Engine::DP);

struct Plan {
  enum class Kind { Ado, Jones, Unified, CSeries } kind;
  int r = 1;
  int n = 0;
  int bound = 0;
  int m = 1;

  static Plan ado(int r) { return {Kind::Ado, r, 0, 0, 1}; }
  static Plan jones(int n) { return {Kind::Jones, 1, n, 0, 1}; }
  static Plan unified(int bound) { return {Kind::Unified, 1, 0, bound, 1}; }
  static Plan cseries(int r, int m) { return {Kind::CSeries, r, 0, 0, m}; }
};

using PlanResult = std::variant<AdoResult, JonesValue, TruncatedUnified, CycSeries>;

PlanResult evaluate(const TangleDiagram& d, const Plan& plan, Engine engine);
inline PlanResult evaluate_dp(const TangleDiagram& d, const Plan& plan) {
  return evaluate(d, plan, Engine::DP);
}

}  // namespace knotforge
