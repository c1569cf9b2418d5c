// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotforge/cycseries.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/error.hpp"
#include "knotforge/hseries.hpp"

namespace knotforge {

class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Symmetric Laurent polynomial in t with A(1) = 1.
class AlexanderPoly {
 public:
  AlexanderPoly() = default;
  explicit AlexanderPoly(std::map<int, Int> coeffs);

  const std::map<int, Int>& coeffs() const noexcept { return coeffs_; }
  Int at_one() const;
  bool is_symmetric() const;
  /// As a polynomial in a variable standing for t.
  LaurentQ as_laurent() const;
  /// A(A^{2r}) with coefficients in Z[zeta_2r].
  CycLaurentA at_a_power(int r) const;

  AlexanderPoly& operator+=(const AlexanderPoly& o);
  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;

  std::string to_string() const;

 private:
  std::map<int, Int> coeffs_;  // no zero entries
};

/// Inverse of a series whose constant term is a signed root of unity times
/// a power of A.
CycSeries invert_series(const CycSeries& s);

/// A -> A^r on a series at r = 1; the precision carries over to powers of
/// {r alpha}.
CycSeries lift_c_series(const CycSeries& s1, int r_target);

/// Upper bound on the t-degree of the Alexander polynomial from the Seifert
/// circles of the diagram.
int alexander_degree_bound(const TangleDiagram& d);

/// Smallest precision for which alexander_from_diagram can certify a result.
int alexander_min_precision(const TangleDiagram& d);

/// Recovers the Alexander polynomial from the series at r = 1.
/// Throws PrecisionError when m is below alexander_min_precision(d).
AlexanderPoly alexander_from_diagram(const TangleDiagram& d, int m);

struct FactorizationReport {
  int r = 1;
  int bound = 0;
  int m = 1;
  bool holds = false;
  /// Canonical residue of the defect modulo {r alpha}^m; zero iff holds.
  CycLaurentA witness;
};

/// Checks ev(unified) * A(A^{2r}) == A^{rf} * ado modulo {r alpha}^m.
/// Requires m <= floor((bound + 1) / r).
FactorizationReport verify_factorization(const TangleDiagram& d, int r, int bound, int m);
FactorizationReport verify_factorization(const TangleDiagram& d, int r, int bound, int m,
                                         const AlexanderPoly& alexander);

struct ConsistencyReport {
  int r = 1;
  int n = 0;
  bool holds = false;
  /// ado value at A = zeta_2r^n times zeta_2r^{f n (r - 1)}.
  CycInt ado_value;
  /// J_n at q = zeta_r, i.e. the stored polynomial at q = zeta_2r.
  CycInt jones_value;
};

/// Compares ado(d, r) at A = zeta_2r^n with jones(d, n) at the root of unity.
/// Requires 0 <= n < r.
ConsistencyReport verify_jones_ado_consistency(const TangleDiagram& d, int r, int n);

/// Taylor expansion of 1 / A(e^h) through h^order.
RationalSeriesH inverse_alexander_expansion(const AlexanderPoly& alexander, int order);

struct MmrPoint {
  int n = 0;
  /// J_n(e^{h/n}) through the requested order.
  RationalSeriesH jones_expansion{0};
  /// jones_expansion minus the expansion of 1 / A(e^h).
  RationalSeriesH difference{0};
};

/// Finite-n shadow of the Melvin-Morton-Rozansky limit.
std::vector<MmrPoint> mmr_trend(const TangleDiagram& d, const std::vector<int>& colors,
                                int order);

}  // namespace knotforge
